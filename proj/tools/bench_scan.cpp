// Benchmark of the OpenMP grid kernels against their serial references.
// Both runs must produce identical output; the point of the comparison is
// the wall time.
#include <chrono>
#include <cstring>
#include <iostream>

#include "hkmod/scan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace hkmod;

namespace {

template <typename Fn>
double timed(Fn fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

template <typename Par, typename Ser, typename Eq>
void bench(const char* name, Par par, Ser ser, Eq eq) {
    double tp = 0, ts = 0;
    bool equal = false;
    {
        decltype(par()) rp;
        decltype(ser()) rs;
        tp = timed([&] { rp = par(); });
        ts = timed([&] { rs = ser(); });
        equal = eq(rp, rs);
    }
    std::cout << name << ": parallel " << tp << "s, serial " << ts << "s, speedup "
              << (tp > 0 ? ts / tp : 0) << "x, outputs " << (equal ? "identical" : "DIFFER")
              << "\n";
    if (!equal) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
    int d_max = 40, e_max = 40;
    long long bound = 100, m0_max = 20;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--dmax") && i + 1 < argc) d_max = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--emax") && i + 1 < argc) e_max = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--bound") && i + 1 < argc) bound = std::atoll(argv[++i]);
        else if (!std::strcmp(argv[i], "--m0max") && i + 1 < argc) m0_max = std::atoll(argv[++i]);
        else {
            std::cerr << "usage: bench_scan [--dmax N] [--emax N] [--bound N] [--m0max N]\n";
            return 2;
        }
    }
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both runs are serial\n";
#endif

    bench(
        "nocamere-grid",
        [&] { return nocamere_grid(d_max, e_max, bound, true); },
        [&] { return nocamere_grid_serial(d_max, e_max, bound); },
        [](const std::vector<NocamereCell>& a, const std::vector<NocamereCell>& b) {
            if (a.size() != b.size()) return false;
            for (std::size_t i = 0; i < a.size(); ++i) {
                const auto &x = a[i], &y = b[i];
                if (x.d != y.d || x.e != y.e || x.k_min != y.k_min ||
                    x.k_min_brute != y.k_min_brute || x.routes_agree != y.routes_agree ||
                    x.bound_holds != y.bound_holds || x.enum_agrees != y.enum_agrees)
                    return false;
            }
            return true;
        });

    bench(
        "chi-end0-grid",
        [&] { return chi_end0_grid(6, 60, true); },
        [&] { return chi_end0_grid_serial(6, 60); },
        [](const std::vector<ChiEnd0Cell>& a, const std::vector<ChiEnd0Cell>& b) {
            if (a.size() != b.size()) return false;
            for (std::size_t i = 0; i < a.size(); ++i) {
                const auto &x = a[i], &y = b[i];
                if (x.r0 != y.r0 || x.m0 != y.m0 || x.sign != y.sign || x.q_zero != y.q_zero ||
                    x.chi_zero != y.chi_zero || x.package_ok != y.package_ok)
                    return false;
            }
            return true;
        });

    bench(
        "oracle-grid",
        [&] { return oracle_grid({2, 3, 4}, m0_max, true); },
        [&] { return oracle_grid_serial({2, 3, 4}, m0_max); },
        [](const std::vector<OracleCell>& a, const std::vector<OracleCell>& b) {
            if (a.size() != b.size()) return false;
            for (std::size_t i = 0; i < a.size(); ++i) {
                const auto &x = a[i], &y = b[i];
                if (x.r0 != y.r0 || x.m0 != y.m0 || x.sign != y.sign || x.ok != y.ok)
                    return false;
            }
            return true;
        });

    bench(
        "econ-grid",
        [&] { return econ_grid(400, 6, true); },
        [&] { return econ_grid_serial(400, 6); },
        [](const std::vector<EconCell>& a, const std::vector<EconCell>& b) {
            if (a.size() != b.size()) return false;
            for (std::size_t i = 0; i < a.size(); ++i) {
                const auto &x = a[i], &y = b[i];
                if (x.e != y.e || x.r0 != y.r0 || x.econ_ok != y.econ_ok ||
                    x.m0_integral != y.m0_integral || x.champollion != y.champollion)
                    return false;
            }
            return true;
        });
    return 0;
}
