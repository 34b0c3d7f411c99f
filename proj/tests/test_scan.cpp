#include <doctest.h>

#include "hkmod/scan.hpp"

using namespace hkmod;

TEST_CASE("parallel grid kernels match their serial references") {
    auto np = nocamere_grid(10, 10, 100, true);
    auto ns = nocamere_grid_serial(10, 10, 100);
    REQUIRE(np.size() == ns.size());
    for (std::size_t i = 0; i < np.size(); ++i) {
        CHECK(np[i].d == ns[i].d);
        CHECK(np[i].e == ns[i].e);
        CHECK(np[i].k_min == ns[i].k_min);
        CHECK(np[i].k_min_brute == ns[i].k_min_brute);
        CHECK(np[i].routes_agree);
        CHECK(np[i].bound_holds);
        CHECK(np[i].enum_agrees);
    }

    auto cp = chi_end0_grid(4, 12, true);
    auto cs = chi_end0_grid_serial(4, 12);
    REQUIRE(cp.size() == cs.size());
    for (std::size_t i = 0; i < cp.size(); ++i) {
        CHECK(cp[i].r0 == cs[i].r0);
        CHECK(cp[i].m0 == cs[i].m0);
        CHECK(cp[i].sign == cs[i].sign);
        CHECK(cp[i].chi_zero == cs[i].chi_zero);
        CHECK(cp[i].q_zero == cs[i].q_zero);
        CHECK((cp[i].q_zero || cp[i].chi_zero));
    }

    auto ep = econ_grid(120, 6, true);
    auto es = econ_grid_serial(120, 6);
    REQUIRE(ep.size() == es.size());
    for (std::size_t i = 0; i < ep.size(); ++i) {
        CHECK(ep[i].econ_ok == es[i].econ_ok);
        CHECK(ep[i].m0_integral == es[i].m0_integral);
        CHECK(ep[i].champollion == es[i].champollion);
        if (ep[i].econ_ok) CHECK(ep[i].champollion);
    }

    auto op = oracle_grid({2, 3}, 6, true);
    auto os = oracle_grid_serial({2, 3}, 6);
    REQUIRE(op.size() == os.size());
    for (std::size_t i = 0; i < op.size(); ++i) {
        CHECK(op[i].ok);
        CHECK(op[i].ok == os[i].ok);
    }
}

TEST_CASE("brute-force kernel guards its 64-bit window") {
    CHECK(min_negative_square_bruteforce(3, 2, 100) == 4);
    CHECK(negative_classes_bruteforce(3, 2, Rat(4), 100).size() == 2);
    CHECK_THROWS_AS(negative_classes_bruteforce(3, 2, Rat(4), 200000), precondition_error);
    CHECK_THROWS_AS(nocamere_grid(10, 10, 5, true), precondition_error);  // window too small
}

TEST_CASE("q = 0 points of the chi grid are exactly the rejected ones") {
    auto cells = chi_end0_grid(6, 60, true);
    std::vector<std::tuple<long long, long long, Sign>> qz;
    for (const auto& c : cells)
        if (c.q_zero) qz.emplace_back(c.r0, c.m0, c.sign);
    REQUIRE(qz.size() == 2);
    CHECK(qz[0] == std::tuple<long long, long long, Sign>{5, 4, Sign::plus});
    CHECK(qz[1] == std::tuple<long long, long long, Sign>{5, 9, Sign::minus});
}
