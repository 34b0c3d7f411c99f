#include "hkmod/abelian.hpp"

#include <algorithm>

namespace hkmod {

PolarizedAbelianType::PolarizedAbelianType(int dim, Int e1, Int e2)
    : n(dim), d1(std::move(e1)), d2(std::move(e2)) {
    if (n < 1) throw precondition_error("dimension must be >= 1");
    if (d1 < 1 || d2 < 1) throw precondition_error("elementary divisors must be positive");
    if (d2 % d1 != 0) throw precondition_error("elementary divisors require d1 | d2");
}

static Int ipow(const Int& b, int e) {
    Int out = 1;
    for (int i = 0; i < e; ++i) out *= b;
    return out;
}

SemihomRank semihom_rank(const PolarizedAbelianType& t, const Int& r0) {
    if (r0 < 1) throw precondition_error("r0 must be >= 1");
    SemihomRank out;
    if (t.n == 1) {  // Atiyah: simple bundles on an elliptic curve
        out.g1 = out.g2 = 1;
        out.r = r0;
        out.gcd_part = Rat(1);
        out.gcd_part_integral = true;
        out.sigma_card = r0 * r0;
        return out;
    }
    out.g1 = gcd_int(r0, t.d1);
    out.g2 = gcd_int(r0, t.d2);
    Int gg = out.g1 * out.g2;
    out.r = ipow(r0, t.n) / gg;  // g1 g2 | r0^2 | r0^n
    out.gcd_part = frac(ipow(r0, t.n - 1), gg);
    out.gcd_part_integral = is_integer(out.gcd_part);
    out.sigma_card = ipow(r0, 2 * t.n) / (gg * gg);
    return out;
}

std::vector<AdmissibleRank> admissible_ranks(const PolarizedAbelianType& t, const Int& c_x,
                                             const Int& r_max) {
    if (c_x < 1) throw precondition_error("c_X must be positive");
    std::vector<AdmissibleRank> out;
    for (Int d = 1; d <= c_x; ++d) {
        if (c_x % d != 0) continue;
        for (Int r0 = 1; ipow(r0, t.n) <= r_max * d; ++r0) {
            Int p = ipow(r0, t.n);
            if (p % d != 0) continue;
            out.push_back(AdmissibleRank{p / d, r0, d});
        }
    }
    std::sort(out.begin(), out.end(), [](const AdmissibleRank& x, const AdmissibleRank& y) {
        return std::tie(x.r, x.r0, x.d) < std::tie(y.r, y.r0, y.d);
    });
    return out;
}

}  // namespace hkmod
