#include <doctest.h>

#include <algorithm>
#include <random>

#include "hkmod/walls.hpp"

using namespace hkmod;

namespace {

GramLattice hyp(long long d, long long e) {
    return GramLattice::hyperbolic_pair(to_int(d), to_int(e));
}

// brute-force wall list: negative classes in the window, reduced to
// primitive representatives, deduplicated
std::vector<LatVec> brute_walls(long long d, long long e, long long a) {
    long long bx = (a * (1 + e)) / (2 * d) + 1;
    std::vector<LatVec> out;
    for (long long y = 1; y <= a; ++y)
        for (long long x = -bx; x <= bx; ++x) {
            long long q = 2 * d * x * y + e * y * y;
            if (q < 0 && -q <= a) {
                LatVec p = primitive_part(LatVec(to_int(x), to_int(y)));
                if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("a-walls are the proportionality classes of the window") {
    auto w4 = awalls(hyp(3, 2), Rat(4));
    REQUIRE(w4.size() == 2);
    CHECK(w4[0].lam == LatVec(Int(-1), Int(1)));
    CHECK(w4[0].q_lam == -4);
    CHECK(w4[1].lam == LatVec(Int(-1), Int(2)));

    CHECK(awalls(hyp(3, 2), Rat(10)).size() == 4);
    CHECK(awalls(hyp(30, 6), Rat(8)).empty());

    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long long> dd(1, 20), ee(0, 20), aa(1, 40);
    for (int t = 0; t < 60; ++t) {
        long long d = dd(rng), e = ee(rng), a = aa(rng);
        auto ws = awalls(hyp(d, e), Rat(to_int(a)));
        std::vector<LatVec> got;
        for (const auto& w : ws) {
            got.push_back(w.lam);
            CHECK(w.lam == primitive_part(w.lam));
            CHECK(w.q_lam < 0);
        }
        CAPTURE(d); CAPTURE(e); CAPTURE(a);
        CHECK(got == brute_walls(d, e, a));
    }
}

TEST_CASE("chamber membership by wall sign patterns") {
    GramLattice L = hyp(3, 2);
    LatVec h(Int(0), Int(1)), h1(Int(6), Int(1));
    CHECK(same_chamber(L, Rat(4), h, h));
    // the wall -f + h pairs with h and with h + 6f with opposite signs
    CHECK_FALSE(same_chamber(L, Rat(4), h, h1));
    // below the first wall there is a single chamber
    GramLattice L2 = hyp(30, 6);
    CHECK(same_chamber(L2, Rat(8), LatVec(Int(0), Int(1)), LatVec(Int(7), Int(2))));

    // a class on a wall is separated from off-wall classes but not from itself
    LatVec on_wall(Int(1), Int(3));  // q(lam, .) = 0 for lam = -f + h
    CHECK(square_q(L, on_wall) > 0);
    CHECK_FALSE(same_chamber(L, Rat(4), on_wall, h));
    CHECK(same_chamber(L, Rat(4), on_wall, on_wall));

    CHECK_THROWS_AS(same_chamber(L, Rat(4), LatVec(Int(1), Int(0)), h), precondition_error);
    // opposite-cone input rejected
    CHECK_THROWS_AS(same_chamber(L, Rat(4), LatVec(Int(0), Int(-1)), h), precondition_error);

    SUBCASE("equivalence relation on off-wall samples") {
        std::vector<LatVec> sample;
        for (long long x = 0; x <= 6; ++x)
            for (long long y = 1; y <= 4; ++y) {
                LatVec v(to_int(x), to_int(y));
                if (square_q(L, v) <= 0) continue;
                bool on_a_wall = false;
                for (const auto& w : awalls(L, Rat(10)))
                    on_a_wall = on_a_wall || pair_q(L, w.lam, v) == 0;
                if (!on_a_wall) sample.push_back(v);
            }
        for (const auto& u : sample)
            for (const auto& v : sample) {
                CHECK(same_chamber(L, Rat(10), u, v) == same_chamber(L, Rat(10), v, u));
                for (const auto& w : sample)
                    if (same_chamber(L, Rat(10), u, v) && same_chamber(L, Rat(10), v, w))
                        CHECK(same_chamber(L, Rat(10), u, w));
            }
    }
}

TEST_CASE("suitability of a polarization for the fibration class") {
    GramLattice L = hyp(3, 2);
    LatVec h(Int(0), Int(1)), f(Int(1), Int(0));
    // the wall -f + h pairs positively with f and negatively with h
    CHECK_FALSE(suitable(L, Rat(4), h, f));
    // no walls at all below the lower bound
    CHECK(suitable(hyp(30, 6), Rat(8), LatVec(Int(0), Int(1)), LatVec(Int(1), Int(0))));
    // a just below 1 admits no integral classes
    CHECK(suitable(L, frac(Int(9), Int(10)), h, f));

    // monotonicity: shrinking a preserves suitability
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long long> dd(1, 12), ee(0, 12), aa(1, 30);
    std::uniform_int_distribution<long long> hx(0, 5), hy(1, 5);
    for (int t = 0; t < 80; ++t) {
        long long d = dd(rng), e = ee(rng);
        GramLattice M = hyp(d, e);
        LatVec hh(to_int(hx(rng)), to_int(hy(rng)));
        if (square_q(M, hh) <= 0) continue;
        long long a = aa(rng);
        if (suitable(M, Rat(to_int(a)), hh, f))
            for (long long a2 = a; a2 >= 1; a2 /= 2) CHECK(suitable(M, Rat(to_int(a2)), hh, f));
    }

    CHECK_THROWS_AS(suitable(L, Rat(4), h, LatVec(Int(0), Int(1))), precondition_error);
}

TEST_CASE("necessary window for destabilizing subsheaves") {
    FujikiModel m(GramLattice({{Int(0), Int(1)}, {Int(1), Int(0)}}));
    ChernCharacter chF = ChernCharacter::zero(2);
    chF.ch0 = 2;
    chF.ch2 = H4Class::c2_class(2, Rat(-1));  // Delta = 4 c2, d = 120, a = 120
    auto dF = modularity_d(m, chF);
    REQUIRE(dF);
    CHECK(*dF == 120);

    ChernCharacter chE = ChernCharacter::zero(2);
    chE.ch0 = 1;

    chE.ch1 = H2Class::zero(2);
    CHECK(destabilizer_window(m, chE, chF, *dF).in_window);  // lambda = 0

    chE.ch1 = H2Class(RatVec{Rat(1), Rat(-15)});  // q(lambda) = -120, the endpoint
    DestabilizerWindow w = destabilizer_window(m, chE, chF, *dF);
    CHECK(w.q_lambda == -120);
    CHECK(w.a_F == 120);
    CHECK(w.in_window);

    chE.ch1 = H2Class(RatVec{Rat(1), Rat(-16)});  // q(lambda) = -128 < -a
    CHECK_FALSE(destabilizer_window(m, chE, chF, *dF).in_window);

    chE.ch1 = H2Class(RatVec{Rat(1), Rat(0)});  // q(lambda) = 0, lambda != 0
    CHECK_FALSE(destabilizer_window(m, chE, chF, *dF).in_window);

    chE.ch0 = 2;  // r(E) < r(F) violated
    CHECK_THROWS_AS(destabilizer_window(m, chE, chF, *dF), precondition_error);
}
