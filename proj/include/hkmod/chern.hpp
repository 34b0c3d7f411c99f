#pragma once

#include <optional>

#include "hkmod/cohomology.hpp"

namespace hkmod {

// Delta(F) = 2r c2(F) - (r-1) c1(F)^2 = -2r ch2(F) + ch1(F)^2.
H4Class discriminant(const FujikiModel& m, const ChernCharacter& ch);

// Tests whether B(a,b) = int Delta . a . b is proportional to the BBF gram
// over all basis pairs; returns the proportionality factor d(F) when it is,
// absent otherwise.
std::optional<Rat> modularity_d(const FujikiModel& m, const ChernCharacter& ch);
std::optional<Rat> modularity_d_of(const FujikiModel& m, const H4Class& delta);

// a(F) = r(F)^2 d(F) / (4 c_X).
Rat a_value(const FujikiModel& m, const ChernCharacter& ch, const Rat& dF);

enum class FourfoldType { K3sq, Kum2 };

// Necessary rank restriction for modular sheaves: r | m^2 on K3^[2] and
// r | 3m^2 on Kum_2, where m is the divisibility of c1.
bool rank_restriction(const GramLattice& L, const Int& r, const LatVec& c1, FourfoldType t);

// lambda_{E,F} = r(F) c1(E) - r(E) c1(F).
H2Class lambda_class(const ChernCharacter& chE, const ChernCharacter& chF);

// For F := E + G (additivity along an exact sequence) checks
//   r_F r_G Delta(E) + r_F r_E Delta(G) = r_E r_G Delta(F) + lambda_{E,F}^2
// componentwise in the model.  This is an algebraic identity, so the result
// is true for every input with positive ranks.
bool mercedes_identity(const FujikiModel& m, const ChernCharacter& chE,
                       const ChernCharacter& chG);

// ch(E (x) E^dual) by the product rule with ch(E^dual)_k = (-1)^k ch_k.
ChernCharacter end_character(const FujikiModel& m, const ChernCharacter& ch);

// chi(End_0 F) = chi(End F) - chi(O_X), using End = End_0 + O.
Rat chi_end0(const FujikiModel& m, const ChernCharacter& ch);

struct ChernClasses {
    H2Class c1;
    H4Class c2;
    H6Class c3;
    TopClass c4;
};

// Newton conversion ch_k -> c_k inside the graded model.
ChernClasses chern_classes_from_character(const FujikiModel& m, const ChernCharacter& ch);

// ch . exp(L) for a degree-2 class L, all divisions exact.
ChernCharacter exp_twist(const FujikiModel& m, const ChernCharacter& ch, const H2Class& L);

}  // namespace hkmod
