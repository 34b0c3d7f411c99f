#include "hkmod/json_io.hpp"

namespace hkmod {

json rat_json(const Rat& r) {
    return json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

json ratvec_json(const RatVec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(rat_json(x));
    return out;
}

json ratmat_json(const RatMat& m) {
    json out = json::array();
    for (const auto& row : m) out.push_back(ratvec_json(row));
    return out;
}

json ratten3_json(const RatTen3& t) {
    json out = json::array();
    for (const auto& m : t) out.push_back(ratmat_json(m));
    return out;
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_object() && j.contains("num") && j.contains("den")) {
        auto field = [&](const char* k) -> Int {
            const json& v = j.at(k);
            if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
            return parse_int(v.get<std::string>());
        };
        return frac(field("num"), field("den"));
    }
    throw usage_error("expected a rational (integer, \"p/q\" or {num,den}): " + j.dump());
}

json lattice_json(const GramLattice& L) {
    json g = json::array();
    for (const auto& row : L.gram) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.get_str());
        g.push_back(r);
    }
    return json{{"gram", g}};
}

GramLattice lattice_from_json(const json& j) {
    if (!j.is_object() || !j.contains("gram")) throw usage_error("lattice needs a \"gram\" field");
    std::vector<std::vector<Int>> g;
    for (const auto& row : j.at("gram")) {
        std::vector<Int> r;
        for (const auto& x : row) {
            Rat v = rat_from_json(x);
            if (!is_integer(v)) throw usage_error("gram entries must be integers");
            r.push_back(v.get_num());
        }
        g.push_back(std::move(r));
    }
    return GramLattice(std::move(g));
}

json character_json(const FujikiModel& m, const ChernCharacter& ch) {
    json out;
    out["model"] = lattice_json(m.lattice);
    out["ch0"] = rat_json(ch.ch0);
    out["ch1"] = ratvec_json(ch.ch1.c);
    out["ch2"] = json{{"sym2", ratmat_json(ch.ch2.sym2)}, {"c2", rat_json(ch.ch2.c2)}};
    out["ch3"] = json{{"sym3", ratten3_json(ch.ch3.sym3)}, {"c2_h2", ratvec_json(ch.ch3.c2_h2.c)}};
    out["ch4"] = rat_json(ch.ch4.v);
    return out;
}

static RatVec ratvec_from_json(const json& j, int rank) {
    RatVec v;
    for (const auto& x : j) v.push_back(rat_from_json(x));
    if (static_cast<int>(v.size()) != rank) throw usage_error("vector length != lattice rank");
    return v;
}

std::pair<FujikiModel, ChernCharacter> character_from_json(const json& j) {
    if (!j.is_object()) throw usage_error("character must be a JSON object");
    if (!j.contains("model")) throw usage_error("character needs a \"model\" field");
    FujikiModel m(lattice_from_json(j.at("model")));
    const int n = m.rank();
    ChernCharacter ch = ChernCharacter::zero(n);
    if (j.contains("ch0")) ch.ch0 = rat_from_json(j.at("ch0"));
    if (j.contains("ch1")) ch.ch1 = H2Class(ratvec_from_json(j.at("ch1"), n));
    if (j.contains("ch2")) {
        const json& c = j.at("ch2");
        if (c.contains("sym2")) {
            RatMat s;
            for (const auto& row : c.at("sym2")) s.push_back(ratvec_from_json(row, n));
            if (static_cast<int>(s.size()) != n) throw usage_error("sym2 must be rank x rank");
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (s[a][b] != s[b][a]) throw usage_error("sym2 must be symmetric");
            ch.ch2.sym2 = std::move(s);
        }
        if (c.contains("c2")) ch.ch2.c2 = rat_from_json(c.at("c2"));
    }
    if (j.contains("ch3")) {
        const json& c = j.at("ch3");
        if (c.contains("sym3")) {
            RatTen3 t;
            for (const auto& mat : c.at("sym3")) {
                RatMat s;
                for (const auto& row : mat) s.push_back(ratvec_from_json(row, n));
                if (static_cast<int>(s.size()) != n) throw usage_error("sym3 shape mismatch");
                t.push_back(std::move(s));
            }
            if (static_cast<int>(t.size()) != n) throw usage_error("sym3 shape mismatch");
            ch.ch3.sym3 = std::move(t);
        }
        if (c.contains("c2_h2")) ch.ch3.c2_h2 = H2Class(ratvec_from_json(c.at("c2_h2"), n));
    }
    if (j.contains("ch4")) ch.ch4 = TopClass(rat_from_json(j.at("ch4")));
    return {std::move(m), std::move(ch)};
}

}  // namespace hkmod
