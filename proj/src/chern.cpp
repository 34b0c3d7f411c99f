#include "hkmod/chern.hpp"

namespace hkmod {

H4Class discriminant(const FujikiModel& m, const ChernCharacter& ch) {
    return Rat(-2) * ch.ch0 * ch.ch2 + mul(m, ch.ch1, ch.ch1);
}

std::optional<Rat> modularity_d_of(const FujikiModel& m, const H4Class& delta) {
    const GramLattice& L = m.lattice;
    const int n = m.rank();
    RatMat B = rat_mat(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            H4Class eij = mul(m, H2Class::basis(n, i), H2Class::basis(n, j));
            B[i][j] = integrate(m, delta, eij);
        }
    // B must equal d * gram; pin d at the first nonzero gram entry.
    std::optional<Rat> d;
    for (int i = 0; i < n && !d; ++i)
        for (int j = i; j < n && !d; ++j)
            if (L.gram[i][j] != 0) d = B[i][j] / Rat(L.gram[i][j]);
    if (!d) d = Rat(0);  // gram identically zero: proportional iff B vanishes
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (B[i][j] != *d * Rat(L.gram[i][j])) return std::nullopt;
    return d;
}

std::optional<Rat> modularity_d(const FujikiModel& m, const ChernCharacter& ch) {
    return modularity_d_of(m, discriminant(m, ch));
}

Rat a_value(const FujikiModel& m, const ChernCharacter& ch, const Rat& dF) {
    return ch.ch0 * ch.ch0 * dF / (4 * m.c_x);
}

bool rank_restriction(const GramLattice& L, const Int& r, const LatVec& c1, FourfoldType t) {
    if (r <= 0) throw precondition_error("rank must be positive");
    Int mdiv = divisibility(L, c1);
    Int target = mdiv * mdiv;
    if (t == FourfoldType::Kum2) target *= 3;
    return target % r == 0;
}

H2Class lambda_class(const ChernCharacter& chE, const ChernCharacter& chF) {
    return chF.ch0 * chE.ch1 - chE.ch0 * chF.ch1;
}

bool mercedes_identity(const FujikiModel& m, const ChernCharacter& chE,
                       const ChernCharacter& chG) {
    if (chE.ch0 <= 0 || chG.ch0 <= 0)
        throw precondition_error("mercedes identity requires positive ranks");
    ChernCharacter chF = chE + chG;
    const Rat &rE = chE.ch0, &rG = chG.ch0, rF = chF.ch0;
    H2Class lam = lambda_class(chE, chF);
    H4Class lhs = rF * rG * discriminant(m, chE) + rF * rE * discriminant(m, chG);
    H4Class rhs = rE * rG * discriminant(m, chF) + mul(m, lam, lam);
    return lhs == rhs;
}

ChernCharacter end_character(const FujikiModel& m, const ChernCharacter& ch) {
    const int n = m.rank();
    ChernCharacter out = ChernCharacter::zero(n);
    out.ch0 = ch.ch0 * ch.ch0;
    // deg 2 and deg 6 cancel; deg 4 is 2r ch2 - ch1^2 = -Delta.
    out.ch2 = 2 * ch.ch0 * ch.ch2 - mul(m, ch.ch1, ch.ch1);
    out.ch4 = 2 * ch.ch0 * ch.ch4 - Rat(2) * mul_top(m, ch.ch1, ch.ch3) +
              mul_top(m, ch.ch2, ch.ch2);
    return out;
}

Rat chi_end0(const FujikiModel& m, const ChernCharacter& ch) {
    if (ch.ch0 <= 0) throw precondition_error("chi(End_0) requires positive rank");
    return hrr_chi(m, end_character(m, ch)) - m.chi_o;
}

ChernClasses chern_classes_from_character(const FujikiModel& m, const ChernCharacter& ch) {
    ChernClasses out;
    out.c1 = ch.ch1;
    H4Class c1sq = mul(m, out.c1, out.c1);
    out.c2 = Rat(1, 2) * c1sq - ch.ch2;
    // 6 ch3 = c1^3 - 3 c1 c2 + 3 c3
    H6Class c1cube = mul(m, out.c1, c1sq);
    out.c3 = Rat(2) * ch.ch3 - Rat(1, 3) * c1cube + mul(m, out.c1, out.c2);
    // 24 ch4 = c1^4 - 4 c1^2 c2 + 4 c1 c3 + 2 c2^2 - 4 c4
    Rat c1_4 = integrate(m, c1sq, c1sq);
    Rat c1sq_c2 = integrate(m, c1sq, out.c2);
    Rat c1_c3 = integrate(m, out.c1, out.c3);
    Rat c2_sq = integrate(m, out.c2, out.c2);
    out.c4 = TopClass((c1_4 - 4 * c1sq_c2 + 4 * c1_c3 + 2 * c2_sq - 24 * ch.ch4.v) / 4);
    return out;
}

ChernCharacter exp_twist(const FujikiModel& m, const ChernCharacter& ch, const H2Class& L) {
    ChernCharacter out = ChernCharacter::zero(m.rank());
    H4Class L2 = mul(m, L, L);
    H6Class L3 = mul(m, L, L2);
    Rat L4 = integrate(m, L2, L2);
    out.ch0 = ch.ch0;
    out.ch1 = ch.ch1 + ch.ch0 * L;
    out.ch2 = ch.ch2 + mul(m, L, ch.ch1) + Rat(ch.ch0) * Rat(1, 2) * L2;
    out.ch3 = ch.ch3 + mul(m, L, ch.ch2) + Rat(1, 2) * mul(m, ch.ch1, L2) +
              ch.ch0 * Rat(1, 6) * L3;
    out.ch4 = ch.ch4 + mul_top(m, L, ch.ch3) + Rat(1, 2) * mul_top(m, L2, ch.ch2) +
              Rat(1, 6) * TopClass(integrate(m, ch.ch1, L3)) + TopClass(ch.ch0 * L4 / 24);
    return out;
}

}  // namespace hkmod
