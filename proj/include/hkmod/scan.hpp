#pragma once

#include <vector>

#include "hkmod/hilb2.hpp"
#include "hkmod/lattice.hpp"

namespace hkmod {

// Grid batteries over lattice and bundle parameters.  Each kernel exists in
// an OpenMP-parallel and a serial form producing identical output (cells are
// independent and written by index); the parallel form is the default, the
// serial one is the reference the tests and the benchmark compare against.

// Brute-force negative-class scan of [[0,d],[d,e]] over |x|,|y| <= bound,
// kept independent of the divisor-based enumeration it validates.  Inputs
// are capped so that all arithmetic fits comfortably in 64 bits.
std::vector<LatVec> negative_classes_bruteforce(long long d, long long e, const Rat& a,
                                                long long bound);
// Smallest -q over negative classes in the window, 0 if none.
long long min_negative_square_bruteforce(long long d, long long e, long long bound);

struct NocamereCell {
    int d, e;
    long long k_min;        // divisor-based route
    long long k_min_brute;  // window scan; the witness provably lies inside
    bool routes_agree;
    bool bound_holds;       // k_min >= 2d/(1+e)
    bool enum_agrees;       // enumerate_negative_classes == brute force scan
};

// Full (d, e) grid in [1, d_max] x [1, e_max] with brute-force window
// |x|,|y| <= bound.  The enumeration is compared at the cutoff
// a = min(2d, floor(2 bound d/(1+e))), for which |y| <= a <= 2d and
// |x| <= a(1+e)/(2d) <= bound, so the scan window provably contains every
// class the enumeration may produce.
std::vector<NocamereCell> nocamere_grid(int d_max, int e_max, long long bound,
                                        bool parallel = true);
std::vector<NocamereCell> nocamere_grid_serial(int d_max, int e_max, long long bound);

struct ChiEnd0Cell {
    long long r0, m0;
    Sign sign;
    bool q_zero;           // q(h^+-) = 0: the construction rejects this point
    bool chi_zero;         // chi(End_0) == 0 (false when q_zero)
    bool package_ok;       // modular package verified (false when q_zero)
};

// chi(End_0) = 0 and the modular package over the grid r0 in [2, r0_max],
// m0 <= m0_max with r0 | m0 + 1, both signs.
std::vector<ChiEnd0Cell> chi_end0_grid(long long r0_max, long long m0_max,
                                       bool parallel = true);
std::vector<ChiEnd0Cell> chi_end0_grid_serial(long long r0_max, long long m0_max);

struct EconCell {
    long long e, r0;
    bool econ_ok;
    bool m0_integral;   // meaningful when econ_ok
    bool champollion;   // r0 | m0 + 1
};

// Congruence gate over e <= e_max, r0 <= r0_max (i = 1 for odd r0, 2 for
// even).  Passing the gate must imply the other two flags.
std::vector<EconCell> econ_grid(long long e_max, long long r0_max, bool parallel = true);
std::vector<EconCell> econ_grid_serial(long long e_max, long long r0_max);

struct OracleCell {
    long long r0, m0;
    Sign sign;
    bool ok;
};

// Blow-up oracle over r0 in r0_set, m0 <= m0_max with r0 | m0 + 1, both signs.
std::vector<OracleCell> oracle_grid(const std::vector<long long>& r0_set, long long m0_max,
                                    bool parallel = true);
std::vector<OracleCell> oracle_grid_serial(const std::vector<long long>& r0_set,
                                           long long m0_max);

}  // namespace hkmod
