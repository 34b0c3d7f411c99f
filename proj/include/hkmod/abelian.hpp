#pragma once

#include <vector>

#include "hkmod/rational.hpp"

namespace hkmod {

// Polarized abelian variety of dimension n with elementary divisors
// (1, ..., 1, d1, d2), d1 | d2.
struct PolarizedAbelianType {
    int n;
    Int d1;
    Int d2;

    PolarizedAbelianType(int dim, Int e1, Int e2);
};

struct SemihomRank {
    Int r;           // r0^n / (g1 g2)
    Rat gcd_part;    // r0^{n-1} / (g1 g2); non-integral input is flagged
    bool gcd_part_integral;
    Int g1, g2;      // gcd(r0, d1), gcd(r0, d2)
    Int sigma_card;  // r0^{2n} / (g1 g2)^2, equals r^2
};

// Rank bookkeeping for a simple semi-homogeneous bundle with c1 a multiple
// of the polarization.  n = 1 is the elliptic-curve special case r = r0.
SemihomRank semihom_rank(const PolarizedAbelianType& t, const Int& r0);

struct AdmissibleRank {
    Int r;
    Int r0;
    Int d;  // divisor of c_X with r = r0^n / d
};

// All ranks r <= r_max realizable as r0^n / d with d | c_X (c_X = 1 for
// K3^[n], n+1 for Kum_n), sorted by (r, r0, d).
std::vector<AdmissibleRank> admissible_ranks(const PolarizedAbelianType& t, const Int& c_x,
                                             const Int& r_max);

}  // namespace hkmod
