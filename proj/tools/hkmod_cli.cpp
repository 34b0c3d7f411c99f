// hkmod: exact-arithmetic computations for modular sheaves on hyperkahler
// fourfolds of K3^[2] type.  All output is exact; rationals are serialized
// as {"num": "...", "den": "..."} in JSON mode.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hkmod/abelian.hpp"
#include "hkmod/blowup.hpp"
#include "hkmod/chern.hpp"
#include "hkmod/hilb2.hpp"
#include "hkmod/json_io.hpp"
#include "hkmod/scan.hpp"
#include "hkmod/verify.hpp"
#include "hkmod/walls.hpp"

using namespace hkmod;
using nlohmann::json;

namespace {

struct Options {
    std::string format = "table";
    bool quiet = false;
    std::string out_path;

    bool json_mode() const { return format == "json"; }
};

json int_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

void write_out(const Options& opt, const json& doc) {
    if (opt.out_path.empty()) return;
    std::ofstream f(opt.out_path);
    if (!f) throw usage_error("cannot open output file: " + opt.out_path);
    f << doc.dump(2) << "\n";
}

void emit(const Options& opt, const json& doc, const std::string& table) {
    if (opt.json_mode()) std::cout << doc.dump() << "\n";
    else std::cout << table;
    write_out(opt, doc);
}

LatVec parse_vec2(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw usage_error("expected \"x,y\", got: " + s);
    return LatVec(parse_int(s.substr(0, comma)), parse_int(s.substr(comma + 1)));
}

Sign parse_sign(const std::string& s) {
    if (s == "+" || s == "plus") return Sign::plus;
    if (s == "-" || s == "minus") return Sign::minus;
    throw usage_error("sign must be + or -");
}

json character_payload(const FujikiModel& m, const ChernCharacter& ch) {
    return character_json(m, ch);
}

json load_ch_arg(const std::string& arg, std::string& err_kind) {
    err_kind = "usage";
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream f(arg.substr(1));
        if (!f) throw usage_error("cannot read character file: " + arg.substr(1));
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw usage_error("malformed JSON character");
    return j;
}

int run_verify(const Options& opt, const std::string& only, bool serial) {
    Report rep = verify_paper(only, !serial);
    json rows = json::array();
    std::ostringstream table;
    for (const auto& r : rep.rows) {
        rows.push_back(json{{"id", r.id},
                            {"group", r.group},
                            {"anchor", r.anchor},
                            {"pass", r.pass},
                            {"expected", r.expected},
                            {"got", r.got}});
        if (!opt.quiet || !r.pass) {
            table << (r.pass ? "PASS " : "FAIL ") << r.id << " [" << r.anchor << "]";
            if (!r.pass) table << " expected=" << r.expected << " got=" << r.got;
            table << "\n";
        }
    }
    json doc{{"checks", rows},
             {"total", rep.rows.size()},
             {"failures", rep.failures()}};
    table << rep.rows.size() - rep.failures() << "/" << rep.rows.size() << " checks passed\n";
    emit(opt, doc, table.str());
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice, Chern-character and wall/chamber computations "
                 "for modular sheaves on K3^[2]-type fourfolds"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // keep -h free for --h below
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    app.add_flag("--quiet", opt.quiet, "only print failures and summaries");
    app.add_option("--out", opt.out_path, "also write the JSON document to a file");

    // walls
    std::string a_str = "0", h_str = "0,1", f_str = "1,0", sign_str_v = "+", only, ch_arg;
    long long d_ll = 0, e_ll = 0, r0_ll = 0, m0_ll = 0, i_ll = 1, n_ll = 2, d1_ll = 1,
              d2_ll = 1;
    std::string a0_str, dd_str;
    bool serial = false;

    auto* walls_cmd = app.add_subcommand("walls", "a-walls of [[0,d],[d,e]]");
    walls_cmd->add_option("--d", d_ll)->required();
    walls_cmd->add_option("--e", e_ll)->required();
    walls_cmd->add_option("--a", a_str, "window bound, rational")->required();

    auto* suit_cmd = app.add_subcommand("suitable", "a-suitability of h for the fibration f");
    suit_cmd->set_help_flag("--help", "print help");
    suit_cmd->add_option("--d", d_ll)->required();
    suit_cmd->add_option("--e", e_ll)->required();
    suit_cmd->add_option("--a", a_str)->required();
    suit_cmd->add_option("--h", h_str, "ample class x,y")->required();
    suit_cmd->add_option("--f", f_str, "fibration class x,y");

    auto* mns_cmd = app.add_subcommand("min-neg-square", "minimal -q over negative classes");
    mns_cmd->add_option("--d", d_ll)->required();
    mns_cmd->add_option("--e", e_ll)->required();

    auto* iso_cmd = app.add_subcommand("isotropic", "primitive isotropic rays and pairings");
    iso_cmd->add_option("--e", e_ll)->required();
    iso_cmd->add_option("--d", d_ll)->required();

    auto* hc_cmd = app.add_subcommand("hilb2-chern", "closed-form character on S^[2]");
    hc_cmd->add_option("--r0", r0_ll)->required();
    hc_cmd->add_option("--m0", m0_ll)->required();
    hc_cmd->add_option("--sign", sign_str_v, "+ or -");

    auto* dict_cmd = app.add_subcommand("dictionary", "(e, r0, i) -> bundle data");
    dict_cmd->add_option("--e", e_ll)->required();
    dict_cmd->add_option("--r0", r0_ll)->required();
    dict_cmd->add_option("--i", i_ll)->required();
    dict_cmd->add_option("--sign", sign_str_v, "+ or -");

    auto* mod_cmd = app.add_subcommand("modularity", "modularity invariant d of a character");
    mod_cmd->add_option("--ch", ch_arg, "character JSON (or @file)")->required();

    auto* chi_cmd = app.add_subcommand("chi-end0", "chi of traceless endomorphisms");
    chi_cmd->add_option("--ch", ch_arg, "character JSON (or @file)")->required();

    auto* or_cmd = app.add_subcommand("oracle", "blow-up GRR oracle vs closed form");
    or_cmd->add_option("--r0", r0_ll)->required();
    or_cmd->add_option("--m0", m0_ll)->required();
    or_cmd->add_option("--sign", sign_str_v, "+ or -");

    auto* sh_cmd = app.add_subcommand("semihom", "semi-homogeneous rank bookkeeping");
    sh_cmd->add_option("--n", n_ll)->required();
    sh_cmd->add_option("--d1", d1_ll)->required();
    sh_cmd->add_option("--d2", d2_ll)->required();
    sh_cmd->add_option("--r0", r0_ll)->required();

    auto* nl_cmd = app.add_subcommand("nl-check", "Noether-Lefschetz numeric hypotheses");
    nl_cmd->add_option("--e", e_ll)->required();
    nl_cmd->add_option("--d", dd_str, "pairing q(h,f), integer")->required();
    nl_cmd->add_option("--i", i_ll)->required();
    nl_cmd->add_option("--r0", r0_ll)->required();
    nl_cmd->add_option("--a0", a0_str, "chamber radius; default (5/8) r0^6 (r0^2-1)");

    auto* cat_cmd = app.add_subcommand("catalog", "known bundles with these invariants");

    auto* ver_cmd = app.add_subcommand("verify-paper", "re-derive every identity; exit 1 on failure");
    ver_cmd->add_option("--only", only, "filter checks by id/anchor substring");
    ver_cmd->add_flag("--serial", serial, "disable the parallel grid kernels");

    // global flags may follow the subcommand, e.g. `dictionary ... --format json`
    for (CLI::App* sc : {walls_cmd, suit_cmd, mns_cmd, iso_cmd, hc_cmd, dict_cmd, mod_cmd,
                         chi_cmd, or_cmd, sh_cmd, nl_cmd, cat_cmd, ver_cmd})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (walls_cmd->parsed()) {
            GramLattice L = GramLattice::hyperbolic_pair(to_int(d_ll), to_int(e_ll));
            Rat a = parse_rat(a_str);
            auto ws = awalls(L, a);
            json arr = json::array();
            std::ostringstream t;
            for (const auto& w : ws) {
                arr.push_back(json{{"lam", json::array({int_json(w.lam.c[0]), int_json(w.lam.c[1])})},
                                   {"q", int_json(w.q_lam)}});
                t << "lam=(" << w.lam.c[0] << "," << w.lam.c[1] << ") q=" << w.q_lam << "\n";
            }
            t << ws.size() << " wall(s)\n";
            emit(opt, json{{"d", d_ll}, {"e", e_ll}, {"a", rat_json(a)}, {"walls", arr}}, t.str());
        } else if (suit_cmd->parsed()) {
            GramLattice L = GramLattice::hyperbolic_pair(to_int(d_ll), to_int(e_ll));
            bool ok = suitable(L, parse_rat(a_str), parse_vec2(h_str), parse_vec2(f_str));
            emit(opt, json{{"suitable", ok}}, std::string(ok ? "suitable\n" : "not suitable\n"));
        } else if (mns_cmd->parsed()) {
            MinNegativeSquare mn =
                min_negative_square(GramLattice::hyperbolic_pair(to_int(d_ll), to_int(e_ll)));
            std::ostringstream t;
            t << mn.k_min << "\n";
            if (!opt.quiet)
                t << "witness=(" << mn.witness.c[0] << "," << mn.witness.c[1] << ") bound="
                  << rat_str(mn.lower_bound) << (mn.bound_holds ? " holds" : " VIOLATED") << "\n";
            emit(opt,
                 json{{"k_min", int_json(mn.k_min)},
                      {"witness", json::array({int_json(mn.witness.c[0]), int_json(mn.witness.c[1])})},
                      {"bound", rat_json(mn.lower_bound)},
                      {"bound_holds", mn.bound_holds}},
                 t.str());
        } else if (iso_cmd->parsed()) {
            IsotropicAnalysis ia = isotropic_analysis(to_int(e_ll), to_int(d_ll));
            std::ostringstream t;
            t << "f=(1,0) alpha=(" << ia.alpha_primitive.c[0] << "," << ia.alpha_primitive.c[1]
              << ")\n"
              << "q(h,f)=" << ia.q_h_f << " q(h,alpha)=" << ia.q_h_alpha_primitive
              << " q(h,alpha_gcd_de)=" << ia.q_h_alpha_gcd_de << "\n"
              << (ia.unique ? "unique\n" : "not unique\n");
            emit(opt,
                 json{{"f", json::array({1, 0})},
                      {"alpha_primitive", json::array({int_json(ia.alpha_primitive.c[0]),
                                                       int_json(ia.alpha_primitive.c[1])})},
                      {"alpha_gcd_de", json::array({int_json(ia.alpha_gcd_de.c[0]),
                                                    int_json(ia.alpha_gcd_de.c[1])})},
                      {"q_h_f", int_json(ia.q_h_f)},
                      {"q_h_alpha", int_json(ia.q_h_alpha_primitive)},
                      {"q_h_alpha_gcd_de", int_json(ia.q_h_alpha_gcd_de)},
                      {"unique", ia.unique}},
                 t.str());
        } else if (hc_cmd->parsed()) {
            Hilb2Character hc = hilb2_chern(to_int(r0_ll), to_int(m0_ll), parse_sign(sign_str_v));
            json doc = character_payload(hc.model, hc.ch);
            doc["q_h"] = rat_json(hc.q_h);
            doc["basis"] = json::array({"mu(D)", "delta"});
            std::ostringstream t;
            t << "ch0=" << rat_str(hc.ch.ch0) << " q(h)=" << rat_str(hc.q_h)
              << " ch3_coeff=" << rat_str(hc.ch.ch3.sym3[0][0][0])
              << " ch4=" << rat_str(hc.ch.ch4.v) << "\n";
            emit(opt, doc, t.str());
        } else if (dict_cmd->parsed()) {
            Dictionary dd = dictionary(to_int(e_ll), to_int(r0_ll), static_cast<int>(i_ll),
                                       parse_sign(sign_str_v));
            json doc{{"e", int_json(dd.e)},          {"r0", int_json(dd.r0)},
                     {"i", dd.i},                    {"sign", sign_str(dd.sign)},
                     {"m0", int_json(dd.m0)},        {"s0", int_json(dd.s0)},
                     {"div_h", int_json(dd.div_h)},  {"ch3_coeff", rat_json(dd.ch3_coeff)},
                     {"ch4", rat_json(dd.ch4)},      {"delta_c2", rat_json(dd.delta_c2)},
                     {"d", rat_json(dd.d)},          {"a", rat_json(dd.a)},
                     {"d0_threshold", rat_json(dd.d0_threshold)},
                     {"d_threshold", rat_json(dd.d_threshold)},
                     {"ch", character_payload(dd.model, dd.ch)}};
            std::ostringstream t;
            t << "m0=" << dd.m0 << " s0=" << dd.s0 << " div(h)=" << dd.div_h
              << " ch3_coeff=" << rat_str(dd.ch3_coeff) << " ch4=" << rat_str(dd.ch4)
              << " d=" << rat_str(dd.d) << " a=" << rat_str(dd.a) << "\n";
            emit(opt, doc, t.str());
        } else if (mod_cmd->parsed()) {
            std::string kind;
            auto [m, ch] = character_from_json(load_ch_arg(ch_arg, kind));
            H4Class delta = discriminant(m, ch);
            auto dopt = modularity_d(m, ch);
            json doc{{"modular", dopt.has_value()},
                     {"d", dopt ? rat_json(*dopt) : json(nullptr)},
                     {"delta", json{{"sym2", ratmat_json(delta.sym2)}, {"c2", rat_json(delta.c2)}}}};
            std::ostringstream t;
            if (dopt) t << "modular, d=" << rat_str(*dopt) << "\n";
            else t << "not modular\n";
            emit(opt, doc, t.str());
        } else if (chi_cmd->parsed()) {
            std::string kind;
            auto [m, ch] = character_from_json(load_ch_arg(ch_arg, kind));
            Rat chi = chi_end0(m, ch);
            emit(opt, json{{"chi_end0", rat_json(chi)}}, "chi_end0=" + rat_str(chi) + "\n");
        } else if (or_cmd->parsed()) {
            OracleReport rep = oracle_compare(to_int(r0_ll), to_int(m0_ll), parse_sign(sign_str_v));
            json mism = json::array();
            for (const auto& mm : rep.mismatches)
                mism.push_back(json{{"degree", mm.degree},
                                    {"monomial", json::array({mm.a, mm.b, mm.j})},
                                    {"grr", rat_json(mm.grr_value)},
                                    {"pullback", rat_json(mm.pullback_value)}});
            json doc{{"ok", rep.ok()},          {"chern_match", rep.chern_match},
                     {"isouno", rep.isouno_ok}, {"isodue", rep.isodue_ok},
                     {"e4", rep.e4_ok},         {"mismatches", mism}};
            std::ostringstream t;
            t << (rep.ok() ? "oracle agrees" : "ORACLE MISMATCH") << " (r0=" << r0_ll
              << ", m0=" << m0_ll << ", sign=" << sign_str_v << ")\n";
            for (const auto& mm : rep.mismatches)
                t << "  deg " << mm.degree << " monomial (" << mm.a << "," << mm.b << "," << mm.j
                  << "): grr=" << rat_str(mm.grr_value)
                  << " pullback=" << rat_str(mm.pullback_value) << "\n";
            emit(opt, doc, t.str());
            if (!rep.ok()) return 1;
        } else if (sh_cmd->parsed()) {
            SemihomRank s = semihom_rank(
                PolarizedAbelianType(static_cast<int>(n_ll), to_int(d1_ll), to_int(d2_ll)), to_int(r0_ll));
            json doc{{"r", int_json(s.r)},
                     {"gcd_part", rat_json(s.gcd_part)},
                     {"gcd_part_integral", s.gcd_part_integral},
                     {"g1", int_json(s.g1)},
                     {"g2", int_json(s.g2)},
                     {"sigma_card", int_json(s.sigma_card)}};
            std::ostringstream t;
            t << "r=" << s.r << " gcd_part=" << rat_str(s.gcd_part)
              << (s.gcd_part_integral ? "" : " (NOT integral: inadmissible r0)")
              << " |Sigma|=" << s.sigma_card << "\n";
            emit(opt, doc, t.str());
        } else if (nl_cmd->parsed()) {
            Int r0 = to_int(r0_ll);
            Rat a0 = a0_str.empty() ? hilb2_a_closed(r0) : parse_rat(a0_str);
            NlHypotheses h =
                nl_hypotheses(to_int(e_ll), parse_int(dd_str), static_cast<int>(i_ll), r0, a0);
            json doc{{"d_gt_10e1", h.d_gt_10e1},
                     {"e_ndiv_2d", h.e_ndiv_2d},
                     {"parity_ok", h.parity_ok},
                     {"d_gt_half_a0e1", h.d_gt_half_a0e1},
                     {"d_gt_pazienza", h.d_gt_pazienza},
                     {"threshold_10e1", rat_json(h.threshold_10e1)},
                     {"threshold_half_a0e1", rat_json(h.threshold_half_a0e1)},
                     {"threshold_pazienza", rat_json(h.threshold_pazienza)},
                     {"all", h.all()}};
            std::ostringstream t;
            auto line = [&](const char* name, bool v) { t << name << ": " << (v ? "ok" : "FAIL") << "\n"; };
            line("d > 10(e+1)", h.d_gt_10e1);
            line("e does not divide 2d", h.e_ndiv_2d);
            line("parity (d even when i=2)", h.parity_ok);
            line("d > a0(e+1)/2", h.d_gt_half_a0e1);
            line("d > (5/16) r0^6 (r0^2-1)(e+1)", h.d_gt_pazienza);
            emit(opt, doc, t.str());
        } else if (cat_cmd->parsed()) {
            json arr = json::array();
            std::ostringstream t;
            for (const auto& ent : catalog()) {
                json e = character_payload(ent.model, ent.ch);
                e["name"] = ent.name;
                e["e"] = int_json(ent.e);
                e["i"] = ent.i;
                e["div_h"] = int_json(ent.div_h);
                arr.push_back(e);
                t << ent.name << " e=" << ent.e << " div(h)=" << ent.div_h
                  << " ch3_coeff=" << rat_str(ent.ch.ch3.sym3[0][0][0])
                  << " ch4=" << rat_str(ent.ch.ch4.v) << "\n";
            }
            emit(opt, json{{"entries", arr}}, t.str());
        } else if (ver_cmd->parsed()) {
            return run_verify(opt, only, serial);
        }
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        json err{{"error", {{"kind", "precondition"}, {"message", e.what()}}}};
        std::cout << err.dump() << "\n";
        return 3;
    } catch (const std::logic_error& e) {
        json err{{"error", {{"kind", "identity-violation"}, {"message", e.what()}}}};
        std::cout << err.dump() << "\n";
        return 1;
    }
    return 0;
}
