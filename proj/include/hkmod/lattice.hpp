#pragma once

#include <optional>
#include <vector>

#include "hkmod/rational.hpp"

namespace hkmod {

// An integral lattice given by the Gram matrix of a symmetric bilinear form q
// on a fixed basis.  For the rank-2 "hyperbolic pair" lattices used by the
// wall machinery the basis is (f, h) with q(f)=0, q(h,f)=d, q(h)=e, i.e.
// gram = [[0,d],[d,e]] with d >= 1, e >= 0.
struct GramLattice {
    std::vector<std::vector<Int>> gram;

    GramLattice() = default;
    explicit GramLattice(std::vector<std::vector<Int>> g);

    int rank() const { return static_cast<int>(gram.size()); }

    static GramLattice hyperbolic_pair(const Int& d, const Int& e);

    bool is_hyperbolic_pair() const;
    Int hyp_d() const { return gram[0][1]; }
    Int hyp_e() const { return gram[1][1]; }
};

struct LatVec {
    std::vector<Int> c;

    LatVec() = default;
    explicit LatVec(std::vector<Int> v) : c(std::move(v)) {}
    LatVec(const Int& x, const Int& y) : c{x, y} {}

    bool is_zero() const;
    bool operator==(const LatVec& o) const { return c == o.c; }
    bool operator<(const LatVec& o) const;  // lexicographic
};

Int pair_q(const GramLattice& L, const LatVec& v, const LatVec& w);
Int square_q(const GramLattice& L, const LatVec& v);
// gcd of the entries of gram*v, i.e. the positive generator of the ideal
// {q(v, w) : w integral}; 0 for v = 0.
Int divisibility(const GramLattice& L, const LatVec& v);

Rat pair_q(const GramLattice& L, const RatVec& v, const RatVec& w);
Rat square_q(const GramLattice& L, const RatVec& v);

struct PairReport {
    Int q_vw;
    Int q_v;
    Int div_v;
};
PairReport pair_and_divisibility(const GramLattice& L, const LatVec& v, const LatVec& w);

LatVec primitive_part(const LatVec& v);  // v / gcd(coords); v itself if zero

// All gamma = x f + y h with -a <= q(gamma) < 0, one representative per +-
// pair (normalized with h-coefficient positive), sorted lexicographically.
//
// Termination: q(x f + y h) = y(2dx + ey), so q(gamma) = -k forces y | k and
// then x is pinned by 2dx = -k/y - ey.  Scanning the integers k in [1, a] and
// the divisors y of k exhausts the solutions.
std::vector<LatVec> enumerate_negative_classes(const GramLattice& L, const Rat& a);

struct MinNegativeSquare {
    Int k_min;          // min{-q(gamma) : q(gamma) < 0}
    LatVec witness;     // a class attaining it
    Rat lower_bound;    // 2d/(1+e)
    bool bound_holds;   // k_min >= 2d/(1+e)
};
// k_min always exists: with y = 1 the squares 2dx + e cover every residue
// mod 2d, so some class has q in [-2d, -1].
MinNegativeSquare min_negative_square(const GramLattice& L);

// Primitive isotropic rays of [[0,d],[d,e]] and their pairings with h.
// Besides f = (1,0) there is exactly one more ray, spanned by 2dh - ef.  Its
// primitive generator is (2dh - ef)/gcd(2d,e); dividing by gcd(d,e) instead
// gives an integral but possibly imprimitive vector whenever e is even.  Both
// normalizations and both pairings with h are reported.
struct IsotropicAnalysis {
    LatVec f;                 // (1, 0)
    LatVec alpha_primitive;   // (2dh - ef)/gcd(2d, e), in (f,h) coordinates
    LatVec alpha_gcd_de;      // (2dh - ef)/gcd(d, e)
    Int q_h_f;                // = d
    Int q_h_alpha_primitive;  // = de/gcd(2d, e)
    Int q_h_alpha_gcd_de;     // = de/gcd(d, e)
    bool unique;              // q(h, alpha_primitive) != d, i.e. e does not divide 2d
};
IsotropicAnalysis isotropic_analysis(const Int& e, const Int& d);

// The numeric hypotheses gating the Lagrangian Noether-Lefschetz arguments.
// Each condition is reported separately together with its threshold.
struct NlHypotheses {
    bool d_gt_10e1;       // d > 10(e+1)
    bool e_ndiv_2d;       // e does not divide 2d
    bool parity_ok;       // d even when i = 2
    bool d_gt_half_a0e1;  // d > a0(e+1)/2
    bool d_gt_pazienza;   // d > (5/16) r0^6 (r0^2-1) (e+1)
    Rat threshold_10e1;
    Rat threshold_half_a0e1;
    Rat threshold_pazienza;
    bool all() const {
        return d_gt_10e1 && e_ndiv_2d && parity_ok && d_gt_half_a0e1 && d_gt_pazienza;
    }
};
NlHypotheses nl_hypotheses(const Int& e, const Int& d, int i, const Int& r0, const Rat& a0);

}  // namespace hkmod
