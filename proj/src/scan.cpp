#include "hkmod/scan.hpp"

#include <algorithm>
#include <exception>

#include "hkmod/blowup.hpp"
#include "hkmod/chern.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hkmod {

namespace {

constexpr long long kScanCap = 100000;

void check_caps(long long d, long long e, long long bound) {
    if (d < 1 || e < 0 || bound < 1) throw precondition_error("bad brute-force parameters");
    if (d > kScanCap || e > kScanCap || bound > kScanCap)
        throw precondition_error("brute-force parameters exceed the 64-bit safety cap");
}

}  // namespace

std::vector<LatVec> negative_classes_bruteforce(long long d, long long e, const Rat& a,
                                                long long bound) {
    check_caps(d, e, bound);
    std::vector<LatVec> out;
    for (long long y = 1; y <= bound; ++y)          // h-coefficient positive
        for (long long x = -bound; x <= bound; ++x) {
            long long q = y * (2 * d * x + e * y);  // |q| <= 3*cap^3, no overflow
            if (q >= 0) continue;
            if (Rat(to_int(-q)) <= a) out.emplace_back(to_int(x), to_int(y));
        }
    std::sort(out.begin(), out.end());
    return out;
}

long long min_negative_square_bruteforce(long long d, long long e, long long bound) {
    check_caps(d, e, bound);
    long long best = 0;
    for (long long y = 1; y <= bound; ++y)
        for (long long x = -bound; x <= bound; ++x) {
            long long q = y * (2 * d * x + e * y);
            if (q < 0 && (best == 0 || -q < best)) best = -q;
        }
    return best;
}

namespace {

NocamereCell nocamere_cell(int d, int e, long long bound) {
    NocamereCell cell{};
    cell.d = d;
    cell.e = e;
    GramLattice L = GramLattice::hyperbolic_pair(to_int(d), to_int(e));
    MinNegativeSquare mn = min_negative_square(L);
    cell.k_min = mn.k_min.get_si();
    cell.bound_holds = mn.bound_holds;
    // The minimum has a witness with |y| <= k_min <= 2d and
    // |x| <= k_min(1+e)/(2d) <= 1+e, so the window sees it whenever
    // bound >= max(2d, 1+e).
    if (bound < std::max<long long>(2LL * d, 1LL + e))
        throw precondition_error("brute-force window too small to certify k_min");
    cell.k_min_brute = min_negative_square_bruteforce(d, e, bound);
    cell.routes_agree = cell.k_min == cell.k_min_brute;
    long long a = std::min<long long>(2LL * d, 2 * bound * d / (1 + e));
    cell.enum_agrees =
        enumerate_negative_classes(L, Rat(to_int(a))) == negative_classes_bruteforce(d, e, Rat(to_int(a)), bound);
    return cell;
}

// Cells are independent and written by index, so parallel and serial runs
// produce identical output.  Exceptions raised inside the parallel region
// are captured and rethrown after the join.
template <typename Cell, typename Fn>
std::vector<Cell> run_indexed(std::size_t n, Fn fn, bool parallel) {
    std::vector<Cell> out(n);
    if (parallel) {
        std::exception_ptr err = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                out[i] = fn(i);
            } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
    } else {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    }
    return out;
}

}  // namespace

std::vector<NocamereCell> nocamere_grid(int d_max, int e_max, long long bound, bool parallel) {
    if (d_max < 1 || e_max < 1) throw precondition_error("empty grid");
    check_caps(d_max, e_max, bound);
    if (bound < std::max<long long>(2LL * d_max, 1LL + e_max))
        throw precondition_error("brute-force window too small to certify k_min");
    const std::size_t n = static_cast<std::size_t>(d_max) * e_max;
    return run_indexed<NocamereCell>(
        n,
        [&](std::size_t i) {
            int d = static_cast<int>(i / e_max) + 1;
            int e = static_cast<int>(i % e_max) + 1;
            return nocamere_cell(d, e, bound);
        },
        parallel);
}

std::vector<NocamereCell> nocamere_grid_serial(int d_max, int e_max, long long bound) {
    return nocamere_grid(d_max, e_max, bound, false);
}

namespace {

std::vector<std::pair<long long, long long>> champollion_pairs(long long r0_max,
                                                               long long m0_max) {
    std::vector<std::pair<long long, long long>> ps;
    for (long long r0 = 2; r0 <= r0_max; ++r0)
        for (long long m0 = r0 - 1; m0 <= m0_max; m0 += r0)
            if (m0 >= 1) ps.emplace_back(r0, m0);
    return ps;
}

ChiEnd0Cell chi_end0_cell(long long r0, long long m0, Sign s) {
    ChiEnd0Cell cell{r0, m0, s, false, false, false};
    if (q_hpm(to_int(r0), to_int(m0), s) == 0) {
        cell.q_zero = true;
        // The construction must reject this point, not silently handle it.
        try {
            hilb2_chern(to_int(r0), to_int(m0), s);
        } catch (const precondition_error&) {
            return cell;
        }
        throw std::logic_error("q(h^+-) = 0 was not rejected");
    }
    Hilb2Character hc = hilb2_chern(to_int(r0), to_int(m0), s);
    cell.chi_zero = chi_end0(hc.model, hc.ch) == 0;
    modular_package(hc.model, to_int(r0), hc.ch);  // hard-fails on mismatch
    cell.package_ok = true;
    return cell;
}

}  // namespace

std::vector<ChiEnd0Cell> chi_end0_grid(long long r0_max, long long m0_max, bool parallel) {
    auto ps = champollion_pairs(r0_max, m0_max);
    return run_indexed<ChiEnd0Cell>(
        2 * ps.size(),
        [&](std::size_t i) {
            auto [r0, m0] = ps[i / 2];
            return chi_end0_cell(r0, m0, i % 2 == 0 ? Sign::plus : Sign::minus);
        },
        parallel);
}

std::vector<ChiEnd0Cell> chi_end0_grid_serial(long long r0_max, long long m0_max) {
    return chi_end0_grid(r0_max, m0_max, false);
}

std::vector<EconCell> econ_grid(long long e_max, long long r0_max, bool parallel) {
    const std::size_t n = static_cast<std::size_t>(e_max) * (r0_max);
    return run_indexed<EconCell>(
        n,
        [&](std::size_t i) {
            long long e = static_cast<long long>(i / r0_max) + 1;
            long long r0 = static_cast<long long>(i % r0_max) + 1;
            EconCell cell{e, r0, false, false, false};
            cell.econ_ok = econ(to_int(e), to_int(r0));
            Rat m0 = emmezero(to_int(e), to_int(r0), Sign::plus);
            cell.m0_integral = is_integer(m0);
            cell.champollion = cell.m0_integral && (m0.get_num() + 1) % to_int(r0) == 0;
            return cell;
        },
        parallel);
}

std::vector<EconCell> econ_grid_serial(long long e_max, long long r0_max) {
    return econ_grid(e_max, r0_max, false);
}

std::vector<OracleCell> oracle_grid(const std::vector<long long>& r0_set, long long m0_max,
                                    bool parallel) {
    std::vector<OracleCell> plan;
    for (long long r0 : r0_set)
        for (long long m0 = 1; m0 <= m0_max; ++m0)
            if ((m0 + 1) % r0 == 0)
                for (Sign s : {Sign::plus, Sign::minus})
                    plan.push_back(OracleCell{r0, m0, s, false});
    return run_indexed<OracleCell>(
        plan.size(),
        [&](std::size_t i) {
            OracleCell cell = plan[i];
            cell.ok = oracle_compare(to_int(cell.r0), to_int(cell.m0), cell.sign).ok();
            return cell;
        },
        parallel);
}

std::vector<OracleCell> oracle_grid_serial(const std::vector<long long>& r0_set,
                                           long long m0_max) {
    return oracle_grid(r0_set, m0_max, false);
}

}  // namespace hkmod
