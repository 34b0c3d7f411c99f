#include "hkmod/hilb2.hpp"

namespace hkmod {

Int mukai_pair(const GramLattice& ns, const MukaiVector& v, const MukaiVector& w) {
    return pair_q(ns, v.d, w.d) - v.r * w.s - w.r * v.s;
}

Int mukai_square(const GramLattice& ns, const MukaiVector& v) { return mukai_pair(ns, v, v); }

Int chi_hom(const GramLattice& ns, const MukaiVector& v, const MukaiVector& w) {
    return -mukai_pair(ns, v, w);
}

FujikiModel hilb2_model(const Int& m0) {
    return FujikiModel(GramLattice({{2 * m0, Int(0)}, {Int(0), Int(-2)}}));
}

static Rat half_sq(const Int& r0, Sign s) {
    Int t = (s == Sign::plus) ? Int(r0 - 1) : Int(r0 + 1);
    return frac(t * t, Int(2));
}

Rat q_hpm(const Int& r0, const Int& m0, Sign s) { return Rat(2 * m0) - half_sq(r0, s); }

H2Class hplus_class(const FujikiModel& m, const Int& r0, const Int& m0, Sign s) {
    if (m.rank() != 2) throw precondition_error("h^+- lives in the (mu(D), delta) model");
    Int t = (s == Sign::plus) ? Int(r0 - 1) : Int(r0 + 1);
    H2Class h(RatVec{Rat(1), frac(-t, Int(2))});
    if (square_q(m.lattice, h.c) != q_hpm(r0, m0, s))
        throw std::logic_error("q(h^+-) does not match 2m0 - (r0 -+ 1)^2/2");
    return h;
}

Hilb2Character hilb2_chern(const Int& r0, const Int& m0, Sign s) {
    if (r0 < 1) throw precondition_error("r0 must be >= 1");
    if (m0 < 1) throw precondition_error("m0 must be >= 1");
    if ((m0 + 1) % r0 != 0)
        throw precondition_error("chi(End F) = 2 requires r0 | m0 + 1");
    FujikiModel m = hilb2_model(m0);
    H2Class h = hplus_class(m, r0, m0, s);
    Rat q = square_q(m.lattice, h.c);
    if (q == 0) throw precondition_error("q(h^+-) = 0 is not supported");

    Rat r2m1 = Rat(r0 * r0 - 1);
    ChernCharacter ch = ChernCharacter::zero(2);
    ch.ch0 = Rat(r0 * r0);
    ch.ch1 = Rat(r0) * h;
    H4Class hsq = mul(m, h, h);
    ch.ch2 = Rat(1, 2) * hsq - (r2m1 / 24) * H4Class::c2_class(2);
    ch.ch3 = ((2 * q - 5 * r2m1) / (12 * Rat(r0) * q)) * mul(m, h, hsq);
    ch.ch4 = TopClass((4 * q * q - 20 * r2m1 * q + r2m1 * Rat(21 * r0 * r0 - 25)) /
                      (32 * Rat(r0 * r0)));
    return Hilb2Character{std::move(m), std::move(h), std::move(q), std::move(ch)};
}

H4Class hilb2_delta_expected(const FujikiModel& m, const Int& r0) {
    Int r = r0 * r0;
    return H4Class::c2_class(m.rank(), frac(r * (r - 1), Int(12)));
}

Rat hilb2_d_closed(const Int& r0) { return Rat(5) * Rat(binom2(r0 * r0)); }

Rat hilb2_a_closed(const Int& r0) {
    Int r2 = r0 * r0;
    return frac(5 * r2 * r2 * r2 * (r2 - 1), Int(8));
}

ModularPackage modular_package(const FujikiModel& m, const Int& r0, const ChernCharacter& ch) {
    if (ch.ch0 != Rat(r0 * r0))
        throw precondition_error("modular package expects rank r0^2");
    ModularPackage out;
    out.delta_matches = discriminant(m, ch) == hilb2_delta_expected(m, r0);
    if (!out.delta_matches)
        throw std::logic_error("Delta(ch) != r(r-1)/12 c2 for a hilb2 character");
    out.d = hilb2_d_closed(r0);
    auto d_int = modularity_d(m, ch);
    if (!d_int || *d_int != out.d)
        throw std::logic_error("modularity invariant d disagrees with 5 C(r,2)");
    out.a = hilb2_a_closed(r0);
    if (a_value(m, ch, out.d) != out.a)
        throw std::logic_error("a(F) from r^2 d/(4 c_X) disagrees with the closed form");
    return out;
}

bool econ(const Int& e, const Int& r0) {
    if (e <= 0 || r0 <= 0) throw precondition_error("e and r0 must be positive");
    Int rhs, mod;
    switch (mpz_fdiv_ui(r0.get_mpz_t(), 4)) {
        case 0: rhs = 4 * r0 - 10; mod = 8 * r0; break;
        case 1: rhs = (r0 - 5) / 2; mod = 2 * r0; break;
        case 2: rhs = -10; mod = 8 * r0; break;
        default: rhs = -(r0 + 5) / 2; mod = 2 * r0; break;
    }
    Int diff = e - rhs;
    return diff % mod == 0;
}

Rat emmezero(const Int& e, const Int& r0, Sign s) {
    Rat first = (r0 % 2 != 0) ? frac(e, Int(2)) : frac(e, Int(8));
    Int t = (s == Sign::plus) ? Int(r0 - 1) : Int(r0 + 1);
    return first + frac(t * t, Int(4));
}

ChernCharacter substitute_h(const FujikiModel& target, const RatVec& h_coords,
                            const ChernCharacter& rank1_ch) {
    const int n = target.rank();
    H2Class h(h_coords);
    ChernCharacter out = ChernCharacter::zero(n);
    out.ch0 = rank1_ch.ch0;
    out.ch1 = rank1_ch.ch1.c[0] * h;
    H4Class hsq = mul(target, h, h);
    out.ch2 = rank1_ch.ch2.sym2[0][0] * hsq +
              H4Class::c2_class(n, rank1_ch.ch2.c2);
    H6Class hcube = mul(target, h, hsq);
    out.ch3 = rank1_ch.ch3.sym3[0][0][0] * hcube;
    out.ch3.c2_h2 = out.ch3.c2_h2 + rank1_ch.ch3.c2_h2.c[0] * h;
    out.ch4 = rank1_ch.ch4;
    return out;
}

// Divisibility of h is an invariant of the full degree-2 integral lattice of
// S^[2], not of the Neron-Severi part alone: D pairs to 1 with some integral
// class of the K3.  A rank-3 completion (mu(D), mu(D'), delta) with
// D.D' = 1, D'^2 = 0 captures that.
static Int dictionary_div_h(const Int& m0, const Int& r0, int i, Sign s) {
    GramLattice L({{2 * m0, Int(1), Int(0)}, {Int(1), Int(0), Int(0)}, {Int(0), Int(0), Int(-2)}});
    Int t = (s == Sign::plus) ? Int(r0 - 1) : Int(r0 + 1);
    Int delta_coeff = Int(i) * t;
    if (delta_coeff % 2 != 0) throw std::logic_error("h = i h^+- must be integral");
    LatVec h(std::vector<Int>{Int(i), Int(0), -delta_coeff / 2});
    return divisibility(L, h);
}

Dictionary dictionary(const Int& e, const Int& r0, int i, Sign s) {
    if (i != 1 && i != 2) throw precondition_error("i must be 1 or 2");
    if ((r0 - i) % 2 != 0) throw precondition_error("i must be congruent to r0 mod 2");
    if (!econ(e, r0)) throw precondition_error("congruence gate fails for (e, r0)");

    Dictionary out{e, r0, i, s, Int(0), Int(0), Int(0),
                   FujikiModel(GramLattice({{e}})), ChernCharacter::zero(1),
                   Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};

    Rat m0r = emmezero(e, r0, s);
    if (!is_integer(m0r)) throw std::logic_error("m0 non-integral although the gate passed");
    out.m0 = m0r.get_num();
    if ((out.m0 + 1) % r0 != 0)
        throw std::logic_error("r0 does not divide m0 + 1 although the gate passed");
    out.s0 = (out.m0 + 1) / r0;

    // ch over the basis (h), h = i h^+, q(h) = e.
    const FujikiModel& m = out.model;
    H2Class h = H2Class::basis(1, 0);
    Rat r2m1 = Rat(r0 * r0 - 1);
    Rat ii(Int(i) * Int(i));
    out.ch.ch0 = Rat(r0 * r0);
    out.ch.ch1 = frac(r0, Int(i)) * h;
    H4Class hsq = mul(m, h, h);
    out.ch.ch2 = (1 / (2 * ii)) * hsq - (r2m1 / 24) * H4Class::c2_class(1);
    Rat er(e);
    if (r0 % 2 != 0) {
        out.ch3_coeff = (2 * er - 5 * r2m1) / (12 * Rat(r0) * er);
        out.ch4 = (4 * er * er - 20 * r2m1 * er + r2m1 * Rat(21 * r0 * r0 - 25)) /
                  (32 * Rat(r0 * r0));
    } else {
        out.ch3_coeff = (er - 10 * r2m1) / (48 * Rat(r0) * er);
        out.ch4 = (er * er - 20 * r2m1 * er + 4 * r2m1 * Rat(21 * r0 * r0 - 25)) /
                  (128 * Rat(r0 * r0));
    }
    out.ch.ch3 = out.ch3_coeff * mul(m, h, hsq);
    out.ch.ch4 = TopClass(out.ch4);

    // Independent route: the closed-form character over (mu(D), delta) with
    // m0 from the congruence data, h |-> i h^+-.
    Hilb2Character direct = hilb2_chern(r0, out.m0, s);
    RatVec h_coords{Rat(i) * direct.hpm.c[0], Rat(i) * direct.hpm.c[1]};
    if (square_q(direct.model.lattice, h_coords) != er)
        throw std::logic_error("q(i h^+-) != e in the dictionary");
    if (!(substitute_h(direct.model, h_coords, out.ch) == direct.ch))
        throw std::logic_error("dictionary character disagrees with the hilb2_chern route");

    ModularPackage pkg = modular_package(direct.model, r0, direct.ch);
    out.delta_c2 = frac(r0 * r0 * (r0 * r0 - 1), Int(12));
    out.d = pkg.d;
    out.a = pkg.a;

    out.div_h = dictionary_div_h(out.m0, r0, i, s);
    out.d0_threshold = frac((2 * out.m0 + 1) * r0 * r0 * (r0 * r0 - 1), Int(4));
    out.d_threshold = hilb2_a_closed(r0) * Rat(e + 1) / 2;
    return out;
}

std::vector<CatalogEntry> catalog() {
    std::vector<CatalogEntry> out;
    for (const auto& [name, e, ch3_den, ch4] :
         {std::tuple{std::string("cubic-lines-Q"), Int(6), Int(-24), Rat(3, 4)},
          std::tuple{std::string("dv-Q"), Int(22), Int(-264), Rat(-1, 4)}}) {
        FujikiModel m(GramLattice({{e}}));
        H2Class h = H2Class::basis(1, 0);
        ChernCharacter ch = ChernCharacter::zero(1);
        ch.ch0 = 4;
        ch.ch1 = h;
        H4Class hsq = mul(m, h, h);
        ch.ch2 = Rat(1, 8) * hsq - Rat(1, 8) * H4Class::c2_class(1);
        ch.ch3 = frac(Int(1), ch3_den) * mul(m, h, hsq);
        ch.ch4 = TopClass(ch4);
        out.push_back(CatalogEntry{name, e, 2, Int(2), std::move(m), std::move(ch)});
    }
    return out;
}

}  // namespace hkmod
