#pragma once

#include "hkmod/chern.hpp"
#include "hkmod/lattice.hpp"

namespace hkmod {

// Stability wall/chamber combinatorics on rank-2 hyperbolic Picard lattices.
// Chambers are kept implicit through sign predicates: wall slopes are
// rational but the boundary rays of the positive cone need not be, and every
// question below reduces to exact integer sign computations.

struct Wall {
    LatVec lam;  // primitive, h-coefficient positive
    Int q_lam;   // q(lam) < 0
    bool operator==(const Wall& o) const { return lam == o.lam && q_lam == o.q_lam; }
};

// Classes lambda with -a <= q(lambda) < 0 up to proportionality, i.e. one
// primitive representative per wall lambda^perp.
std::vector<Wall> awalls(const GramLattice& L, const Rat& a);

// True iff no a-wall separates h0 from h1: no wall lambda pairs with h0 and
// h1 with strictly opposite signs or with exactly one of the two pairings
// zero (a class lying on a wall is not in any open chamber).
bool same_chamber(const GramLattice& L, const Rat& a, const LatVec& h0, const LatVec& h1);

// Suitability of h for the fibration class f: every lambda in the a-window
// must pair with h and with f with the same sign, or with both pairings
// zero.  A (zero, nonzero) sign pattern violates suitability.
bool suitable(const GramLattice& L, const Rat& a, const LatVec& h, const LatVec& f);

struct DestabilizerWindow {
    H2Class lambda;
    Rat q_lambda;
    Rat a_F;
    bool in_window;  // -a(F) <= q(lambda) <= 0, with 0 allowed only for lambda = 0
};

// The necessary window for the class lambda_{E,F} of a destabilizing
// subsheaf of a modular F with invariant d(F).
DestabilizerWindow destabilizer_window(const FujikiModel& m, const ChernCharacter& chE,
                                       const ChernCharacter& chF, const Rat& dF);

}  // namespace hkmod
