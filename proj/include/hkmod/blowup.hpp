#pragma once

#include <array>
#include <vector>

#include "hkmod/hilb2.hpp"

namespace hkmod {

// Evaluation-only model of the subring of H^*(Bl_diag(S x S)) generated by
// pullbacks from the two S factors and the exceptional class e.  S-classes
// are polynomials in a fixed divisor D with D^2 = 2 m0 eta, so the monomial
// basis is q1*(u_a) . q2*(u_b) . e^j with u_0 = 1, u_1 = D, u_2 = eta and
// complex degree a + b + j <= 4.
//
// Top evaluation rules (a + b + j = 4), derived from the projective-bundle
// geometry of the exceptional divisor E = P(Theta_S) with e|_E the
// tautological class of O(-1) and c(Theta_S) = 1 + 24 eta:
//   j = 0:  int q1*x . q2*y = (int_S x)(int_S y)      (Kunneth)
//   j = 1:  0            (pushforward of 1 from a P^1-bundle vanishes)
//   j = 2:  -int_S(x.y)  (e|_E has fiber degree -1)
//   j = 3:  0            ((e|_E)^2 = -24 tau* eta pushes to zero)
//   j = 4:  24
// The j = 4 value has a second, independent justification: the double cover
// p multiplies integrals by 2 and p* delta = e, so int e^4 = 2 int delta^4
// = 2 * 3 q(delta)^2 = 24.
class BlowupRing {
public:
    explicit BlowupRing(Int m0);
    const Int& m0() const { return m0_; }

private:
    Int m0_;
};

struct BlowupClass {
    // coefficient of q1*(u_a) q2*(u_b) e^j at [a][b][j]
    std::array<std::array<std::array<Rat, 5>, 3>, 3> c{};

    static BlowupClass monomial(int a, int b, int j, const Rat& coeff = Rat(1));
    BlowupClass degree_part(int k) const;  // complex degree k
    bool is_zero() const;
    bool operator==(const BlowupClass& o) const { return c == o.c; }
};

BlowupClass operator+(const BlowupClass&, const BlowupClass&);
BlowupClass operator-(const BlowupClass&, const BlowupClass&);
BlowupClass operator*(const Rat&, const BlowupClass&);

// Graded product; monomials of S-degree > 4 in either factor or of total
// complex degree > 4 vanish on the eightfold.
BlowupClass mul(const BlowupRing& R, const BlowupClass& x, const BlowupClass& y);

// Integral over the blow-up; the class must be homogeneous of degree 8.
Rat eval_top_blowup(const BlowupRing& R, const BlowupClass& x);

// Ring-homomorphic pullback p* from the (mu(D), delta) model of S^[2]:
// mu(D) -> q1*D + q2*D, delta -> e, c2(S^[2]) -> 24(q1*eta + q2*eta) - 3e^2,
// top classes scale by deg p = 2.
BlowupClass pullback_h2(const BlowupRing& R, const H2Class& a);
BlowupClass pullback_ch(const BlowupRing& R, const FujikiModel& m, const ChernCharacter& ch);

// p* ch(F[2]^+-) straight from Grothendieck-Riemann-Roch on the defining
// exact sequence: q1*ch(F) . q2*ch(F) minus the correction supported on E,
//   ( C(r0,2)    + (r0-1)/2 sum_i qi*ch1 + 1/4 sum_i qi*((2r0-4)ch2 + ch1^2) )
// times (e - e^2/2 + e^3/6 - e^4/24) for the "+" case; the "-" case replaces
// the wedge-square character by the symmetric-square one,
//   ( C(r0+1,2)  + (r0+1)/2 sum_i qi*ch1 + 1/4 sum_i qi*((2r0+4)ch2 + ch1^2) ).
// Requires r0 | m0 + 1 (so that ch2(F) = (s0 - r0) eta).
BlowupClass grr_hilb2(const Int& r0, const Int& m0, Sign s);

// The two relations that pin the evaluation rules, as degree-3 classes:
//   2(q1*eta q2*D + q1*D q2*eta) + (q1*D + q2*D) e^2
//   12 q1*D . q2*D . e + m0 e^3          (undecorated-factor reading q2*D)
//   12 q1*(D^2) . e + m0 e^3             (alternative reading q1*D)
// All three integrate to zero against every degree-1 monomial.
BlowupClass relation_isouno(const BlowupRing& R);
BlowupClass relation_isodue(const BlowupRing& R);      // q2*D reading (used by checks)
BlowupClass relation_isodue_alt(const BlowupRing& R);  // q1*D reading

struct OracleMismatch {
    int degree;          // complex degree of the compared component
    int a, b, j;         // complementary monomial
    Rat grr_value;
    Rat pullback_value;
};

struct OracleReport {
    Int r0, m0;
    Sign sign;
    bool chern_match;    // all complementary pairings of the two routes agree
    bool isouno_ok;
    bool isodue_ok;      // both readings
    bool e4_ok;          // int e^4 = 24 = 2 int delta^4
    std::vector<OracleMismatch> mismatches;
    bool ok() const { return chern_match && isouno_ok && isodue_ok && e4_ok; }
};

// Re-derivation of the closed-form character: pairs grr_hilb2 against the
// pullback of hilb2_chern degree by degree over every complementary-degree
// monomial, and checks the relations above as integrated identities.
OracleReport oracle_compare(const Int& r0, const Int& m0, Sign s);

}  // namespace hkmod
