#pragma once

#include <string>
#include <vector>

#include "hkmod/chern.hpp"

namespace hkmod {

// Mukai vector (r, D, s) on a K3 surface with NS-lattice gram ns;
// <(r,D,s),(r',D',s')> = D.D' - r s' - r' s and chi(F,E) = -<v(F),v(E)>.
struct MukaiVector {
    Int r;
    LatVec d;
    Int s;
};

Int mukai_pair(const GramLattice& ns, const MukaiVector& v, const MukaiVector& w);
Int mukai_square(const GramLattice& ns, const MukaiVector& v);
Int chi_hom(const GramLattice& ns, const MukaiVector& v, const MukaiVector& w);

enum class Sign { plus, minus };
inline const char* sign_str(Sign s) { return s == Sign::plus ? "+" : "-"; }

// Cohomology model of S^[2] over the basis (mu(D), delta) with
// q(mu(D)) = D^2 = 2 m0, q(delta) = -2, q(mu(D), delta) = 0.
FujikiModel hilb2_model(const Int& m0);

// q(h^+-) = 2 m0 - (r0 -+ 1)^2 / 2.
Rat q_hpm(const Int& r0, const Int& m0, Sign s);

// h^+- = mu(D) - ((r0 -+ 1)/2) delta in the (mu(D), delta) basis.  Checks
// the relation 2 m0 = q(h^+-) + (r0 -+ 1)^2/2 against the model.
H2Class hplus_class(const FujikiModel& m, const Int& r0, const Int& m0, Sign s);

struct Hilb2Character {
    FujikiModel model;  // hilb2_model(m0)
    H2Class hpm;
    Rat q_h;  // q(h^+-)
    ChernCharacter ch;
};

// Closed-form Chern character of the rank-r0^2 bundle induced on S^[2] by a
// bundle on S with Mukai vector (r0, D, s0), m0 + 1 = r0 s0:
//   ch0 = r0^2, ch1 = r0 h, ch2 = h^2/2 - ((r0^2-1)/24) c2,
//   ch3 = (2q - 5(r0^2-1))/(12 r0 q) h^3,
//   ch4 = (4q^2 - 20(r0^2-1)q + (r0^2-1)(21 r0^2 - 25))/(32 r0^2),
// with h = h^+-, q = q(h^+-).  Requires r0 | m0 + 1 and q(h^+-) != 0 (the
// q = 0 case is rejected, not silently handled).
Hilb2Character hilb2_chern(const Int& r0, const Int& m0, Sign s);

// Closed-form modular invariants of these bundles (r = r0^2):
//   Delta = r(r-1)/12 c2,  d = 5 C(r,2),  a = (5/8) r0^6 (r0^2 - 1).
H4Class hilb2_delta_expected(const FujikiModel& m, const Int& r0);
Rat hilb2_d_closed(const Int& r0);
Rat hilb2_a_closed(const Int& r0);

struct ModularPackage {
    bool delta_matches;  // Delta(ch) == r(r-1)/12 c2 componentwise
    Rat d;               // 5 C(r,2), cross-checked against modularity_d
    Rat a;               // (5/8) r0^6 (r0^2-1), cross-checked against r^2 d / 4c_X
};

// Verifies the package on a character produced by hilb2_chern; any mismatch
// is a hard failure (it would falsify an identity, i.e. indicate a bug).
ModularPackage modular_package(const FujikiModel& m, const Int& r0, const ChernCharacter& ch);

// Congruence gate on (e, r0):
//   e =  4 r0 - 10   mod 8 r0   if r0 = 0 mod 4
//   e = (r0 - 5)/2   mod 2 r0   if r0 = 1 mod 4
//   e = -10          mod 8 r0   if r0 = 2 mod 4
//   e = -(r0 + 5)/2  mod 2 r0   if r0 = 3 mod 4
bool econ(const Int& e, const Int& r0);

// m0 = e/2 + (r0 -+ 1)^2/4 for odd r0, e/8 + (r0 -+ 1)^2/4 for even r0, as a
// rational; integral whenever econ holds.
Rat emmezero(const Int& e, const Int& r0, Sign s);

struct Dictionary {
    Int e;
    Int r0;
    int i;
    Sign sign;
    Int m0;
    Int s0;            // (m0 + 1)/r0
    Int div_h;         // divisibility of h, computed on a unimodular completion
    FujikiModel model; // rank-1 model over the basis (h), q(h) = e
    ChernCharacter ch; // over that basis
    Rat ch3_coeff;     // ch3 = ch3_coeff h^3
    Rat ch4;           // multiple of the point class
    Rat delta_c2;      // Delta = delta_c2 * c2
    Rat d;
    Rat a;
    Rat d0_threshold;  // restriction degree d0 must exceed (2m0+1) r0^2 (r0^2-1)/4
    Rat d_threshold;   // NL pairing d must exceed (5/16) r0^6 (r0^2-1)(e+1)
};

// Arithmetic dictionary (e, r0, i) -> bundle data.  Requires i in {1,2},
// i = r0 mod 2 and the congruence gate; once the gate passes, m0 integral
// and r0 | m0+1 are theorems, so their failure raises a logic error.  The
// emitted character is cross-checked against the hilb2_chern route.
Dictionary dictionary(const Int& e, const Int& r0, int i, Sign s = Sign::plus);

struct CatalogEntry {
    std::string name;
    Int e;
    int i;
    Int div_h;
    FujikiModel model;  // rank-1 over (h)
    ChernCharacter ch;
};

// The two known rank-4 bundles with these invariants: the tautological
// quotients on the variety of lines of a cubic fourfold (e = 6) and on the
// Debarre-Voisin fourfold (e = 22).
std::vector<CatalogEntry> catalog();

// Re-expresses a character over a rank-1 basis (h) in another model, mapping
// h to the given coordinate vector.
ChernCharacter substitute_h(const FujikiModel& target, const RatVec& h_coords,
                            const ChernCharacter& rank1_ch);

}  // namespace hkmod
