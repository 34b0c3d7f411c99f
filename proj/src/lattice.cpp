#include "hkmod/lattice.hpp"

#include <algorithm>

namespace hkmod {

GramLattice::GramLattice(std::vector<std::vector<Int>> g) : gram(std::move(g)) {
    const std::size_t n = gram.size();
    for (const auto& row : gram)
        if (row.size() != n) throw precondition_error("gram matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gram[i][j] != gram[j][i]) throw precondition_error("gram matrix is not symmetric");
}

GramLattice GramLattice::hyperbolic_pair(const Int& d, const Int& e) {
    if (d < 1) throw precondition_error("hyperbolic pair requires d >= 1");
    if (e < 0) throw precondition_error("hyperbolic pair requires e >= 0");
    return GramLattice({{Int(0), d}, {d, e}});
}

bool GramLattice::is_hyperbolic_pair() const {
    return rank() == 2 && gram[0][0] == 0 && gram[0][1] >= 1 && gram[1][1] >= 0;
}

bool LatVec::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

bool LatVec::operator<(const LatVec& o) const {
    return std::lexicographical_compare(c.begin(), c.end(), o.c.begin(), o.c.end());
}

static void check_dim(const GramLattice& L, const LatVec& v) {
    if (static_cast<int>(v.c.size()) != L.rank())
        throw precondition_error("vector length does not match lattice rank");
}

Int pair_q(const GramLattice& L, const LatVec& v, const LatVec& w) {
    check_dim(L, v);
    check_dim(L, w);
    Int s = 0;
    for (int i = 0; i < L.rank(); ++i)
        for (int j = 0; j < L.rank(); ++j) s += v.c[i] * L.gram[i][j] * w.c[j];
    return s;
}

Int square_q(const GramLattice& L, const LatVec& v) { return pair_q(L, v, v); }

Rat pair_q(const GramLattice& L, const RatVec& v, const RatVec& w) {
    if (static_cast<int>(v.size()) != L.rank() || static_cast<int>(w.size()) != L.rank())
        throw precondition_error("vector length does not match lattice rank");
    Rat s = 0;
    for (int i = 0; i < L.rank(); ++i)
        for (int j = 0; j < L.rank(); ++j) s += v[i] * Rat(L.gram[i][j]) * w[j];
    return s;
}

Rat square_q(const GramLattice& L, const RatVec& v) { return pair_q(L, v, v); }

Int divisibility(const GramLattice& L, const LatVec& v) {
    check_dim(L, v);
    Int g = 0;
    for (int i = 0; i < L.rank(); ++i) {
        Int e = 0;
        for (int j = 0; j < L.rank(); ++j) e += L.gram[i][j] * v.c[j];
        g = gcd_int(g, e);
    }
    return g;
}

PairReport pair_and_divisibility(const GramLattice& L, const LatVec& v, const LatVec& w) {
    return PairReport{pair_q(L, v, w), square_q(L, v), divisibility(L, v)};
}

LatVec primitive_part(const LatVec& v) {
    Int g = 0;
    for (const auto& x : v.c) g = gcd_int(g, x);
    if (g == 0 || g == 1) return v;
    LatVec out = v;
    for (auto& x : out.c) x /= g;
    return out;
}

static void require_hyperbolic(const GramLattice& L) {
    if (!L.is_hyperbolic_pair())
        throw precondition_error("operation requires a rank-2 hyperbolic (f,h) lattice");
}

// Solutions of q(x f + y h) = -k with y > 0: y runs over the positive
// divisors of k and x = (-k/y - e y)/(2d) when that quotient is integral.
static void negative_classes_of_square(const Int& d, const Int& e, const Int& k,
                                       std::vector<LatVec>& out) {
    auto visit = [&](const Int& y) {
        Int num = -(k / y) - e * y;
        if (num % (2 * d) == 0) out.emplace_back(num / (2 * d), y);
    };
    for (Int y = 1; y * y <= k; ++y) {
        if (k % y != 0) continue;
        visit(y);
        if (k / y != y) visit(k / y);
    }
}

std::vector<LatVec> enumerate_negative_classes(const GramLattice& L, const Rat& a) {
    require_hyperbolic(L);
    const Int d = L.hyp_d(), e = L.hyp_e();
    std::vector<LatVec> out;
    if (a <= 0) return out;
    const Int kmax = floor_int(a);
    for (Int k = 1; k <= kmax; ++k) negative_classes_of_square(d, e, k, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MinNegativeSquare min_negative_square(const GramLattice& L) {
    require_hyperbolic(L);
    const Int d = L.hyp_d(), e = L.hyp_e();
    // With y = 1, q = 2dx + e hits some value in [-2d, -1]; so k_min <= 2d.
    for (Int k = 1; k <= 2 * d; ++k) {
        std::vector<LatVec> hits;
        negative_classes_of_square(d, e, k, hits);
        if (!hits.empty()) {
            std::sort(hits.begin(), hits.end());
            Rat bound = Rat(2 * d) / Rat(1 + e);
            return MinNegativeSquare{k, hits.front(), bound, Rat(k) >= bound};
        }
    }
    throw std::logic_error("negative class of square >= -2d must exist");
}

IsotropicAnalysis isotropic_analysis(const Int& e, const Int& d) {
    if (e <= 0) throw precondition_error("isotropic analysis requires e >= 1");
    if (d <= 0) throw precondition_error("isotropic analysis requires d >= 1");
    IsotropicAnalysis out;
    out.f = LatVec(Int(1), Int(0));
    // The second isotropic ray is spanned by 2dh - ef, i.e. (-e, 2d) in (f,h)
    // coordinates; q(h, 2dh - ef) = de.  Sign already gives q(alpha, h) > 0.
    const Int g_full = gcd_int(2 * d, e);
    const Int g_de = gcd_int(d, e);
    out.alpha_primitive = LatVec(-e / g_full, 2 * d / g_full);
    out.alpha_gcd_de = LatVec(-e / g_de, 2 * d / g_de);
    out.q_h_f = d;
    out.q_h_alpha_primitive = d * e / g_full;
    out.q_h_alpha_gcd_de = d * e / g_de;
    out.unique = (out.q_h_alpha_primitive != d);  // equivalent to e not dividing 2d
    return out;
}

NlHypotheses nl_hypotheses(const Int& e, const Int& d, int i, const Int& r0, const Rat& a0) {
    if (i != 1 && i != 2) throw precondition_error("i must be 1 or 2");
    if (e <= 0 || d <= 0 || r0 <= 0) throw precondition_error("e, d, r0 must be positive");
    NlHypotheses out;
    out.threshold_10e1 = Rat(10 * (e + 1));
    out.threshold_half_a0e1 = a0 * Rat(e + 1) / 2;
    Int r2 = r0 * r0;
    out.threshold_pazienza = frac(5 * r2 * r2 * r2 * (r2 - 1) * (e + 1), Int(16));
    out.d_gt_10e1 = Rat(d) > out.threshold_10e1;
    out.e_ndiv_2d = (2 * d) % e != 0;
    out.parity_ok = (i == 1) || (d % 2 == 0);
    out.d_gt_half_a0e1 = Rat(d) > out.threshold_half_a0e1;
    out.d_gt_pazienza = Rat(d) > out.threshold_pazienza;
    return out;
}

}  // namespace hkmod
