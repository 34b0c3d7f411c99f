#include <doctest.h>

#include <random>

#include "hkmod/lattice.hpp"

using namespace hkmod;

namespace {

// Independent brute-force scan used as the oracle for the divisor-based
// enumeration.  For q(xf + yh) = -k with 1 <= k <= a we have y | k, hence
// |y| <= a, and |2dx| <= |q|/|y| + e|y| <= a(1 + e), so |x| <= a(1+e)/(2d).
std::vector<LatVec> brute_negative(long long d, long long e, long long a) {
    long long bx = (a * (1 + e)) / (2 * d) + 1;
    std::vector<LatVec> out;
    for (long long y = 1; y <= a; ++y)
        for (long long x = -bx; x <= bx; ++x) {
            long long q = 2 * d * x * y + e * y * y;
            if (q < 0 && -q <= a) out.emplace_back(to_int(x), to_int(y));
        }
    std::sort(out.begin(), out.end());
    return out;
}

GramLattice hyp(long long d, long long e) {
    return GramLattice::hyperbolic_pair(to_int(d), to_int(e));
}

}  // namespace

TEST_CASE("pairings, squares and divisibility") {
    GramLattice L = hyp(3, 2);
    CHECK(pair_q(L, LatVec(Int(0), Int(1)), LatVec(Int(1), Int(0))) == 3);
    // 2xyd + ey^2 with x=-1, y=1, d=3, e=2
    CHECK(square_q(L, LatVec(Int(-1), Int(1))) == -4);
    CHECK(divisibility(L, LatVec(Int(0), Int(0))) == 0);
    PairReport r = pair_and_divisibility(L, LatVec(Int(-1), Int(1)), LatVec(Int(0), Int(1)));
    CHECK(r.q_v == -4);
    CHECK(r.div_v == 1);

    CHECK_THROWS_AS(pair_q(L, LatVec(std::vector<Int>{Int(1)}), LatVec(Int(0), Int(1))),
                    precondition_error);
    CHECK_THROWS_AS(GramLattice({{Int(0), Int(1)}, {Int(2), Int(0)}}), precondition_error);
}

TEST_CASE("bilinear symmetry on random vectors") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int t = 0; t < 200; ++t) {
        GramLattice L({{Int(coef(rng)), Int(0), Int(0)},
                       {Int(0), Int(coef(rng)), Int(0)},
                       {Int(0), Int(0), Int(coef(rng))}});
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) L.gram[i][j] = L.gram[j][i] = Int(coef(rng));
        LatVec v(std::vector<Int>{Int(coef(rng)), Int(coef(rng)), Int(coef(rng))});
        LatVec w(std::vector<Int>{Int(coef(rng)), Int(coef(rng)), Int(coef(rng))});
        CHECK(pair_q(L, v, w) == pair_q(L, w, v));
    }
}

TEST_CASE("negative-class enumeration matches the brute-force oracle") {
    // frozen oracle values
    CHECK(enumerate_negative_classes(hyp(3, 2), Rat(3)).empty());
    CHECK(enumerate_negative_classes(hyp(3, 2), Rat(4)) ==
          std::vector<LatVec>{LatVec(Int(-1), Int(1)), LatVec(Int(-1), Int(2))});
    CHECK(enumerate_negative_classes(hyp(30, 6), Rat(8)).empty());
    // exact rational cutoff: q = -4 admitted at a = 4 but not at a = 7/2
    CHECK(enumerate_negative_classes(hyp(3, 2), frac(Int(7), Int(2))).empty());

    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long long> dd(1, 50), ee(0, 50), aa(1, 60);
    for (int t = 0; t < 120; ++t) {
        long long d = dd(rng), e = ee(rng), a = aa(rng);
        CAPTURE(d); CAPTURE(e); CAPTURE(a);
        CHECK(enumerate_negative_classes(hyp(d, e), Rat(to_int(a))) == brute_negative(d, e, a));
    }

    CHECK_THROWS_AS(enumerate_negative_classes(GramLattice({{Int(2)}}), Rat(4)),
                    precondition_error);

    SUBCASE("window membership and normalization of every class") {
        for (long long d : {1, 3, 7, 30})
            for (long long e : {0, 2, 5, 11}) {
                GramLattice L = hyp(d, e);
                for (const LatVec& g : enumerate_negative_classes(L, Rat(25))) {
                    Int q = square_q(L, g);
                    CHECK(q < 0);
                    CHECK(q >= -25);
                    CHECK(g.c[1] > 0);  // one representative per +- pair
                }
            }
    }
}

TEST_CASE("minimal negative square with the lower bound") {
    MinNegativeSquare a = min_negative_square(hyp(3, 2));
    CHECK(a.k_min == 4);
    CHECK(a.bound_holds);  // 4 >= 6/3

    MinNegativeSquare b = min_negative_square(hyp(1, 0));
    CHECK(b.k_min == 2);
    CHECK(square_q(hyp(1, 0), b.witness) == -2);
    CHECK(b.lower_bound == 2);  // bound attained
    CHECK(b.bound_holds);

    MinNegativeSquare c = min_negative_square(hyp(30, 6));
    CHECK(c.k_min >= 9);   // ceil(60/7)
    CHECK(c.k_min == 54);  // frozen from the brute-force oracle

    std::mt19937_64 rng(43);
    std::uniform_int_distribution<long long> dd(1, 25), ee(0, 25);
    for (int t = 0; t < 80; ++t) {
        long long d = dd(rng), e = ee(rng);
        GramLattice L = hyp(d, e);
        MinNegativeSquare mn = min_negative_square(L);
        CAPTURE(d); CAPTURE(e);
        CHECK(square_q(L, mn.witness) == -mn.k_min);
        CHECK(Rat(mn.k_min) >= mn.lower_bound);
        // oracle: nothing smaller shows up in the window containing k_min
        auto all = brute_negative(d, e, mn.k_min.get_si());
        REQUIRE(!all.empty());
        for (const LatVec& g : all) CHECK(square_q(L, g) == -mn.k_min);
    }
}

TEST_CASE("isotropic rays and the uniqueness criterion") {
    IsotropicAnalysis a = isotropic_analysis(Int(22), Int(45));
    CHECK(a.q_h_f == 45);
    CHECK(a.q_h_alpha_gcd_de == 990);
    CHECK(a.q_h_alpha_primitive == 495);
    CHECK(a.unique);
    GramLattice L = hyp(45, 22);
    CHECK(square_q(L, a.alpha_primitive) == 0);
    CHECK(pair_q(L, a.alpha_primitive, LatVec(Int(0), Int(1))) == 495);

    // enumeration oracle: the only primitive isotropic rays with
    // |x|,|y| <= 200 are f and alpha
    int rays = 0;
    bool saw_f = false, saw_alpha = false;
    for (long long y = 0; y <= 200; ++y)
        for (long long x = -200; x <= 200; ++x) {
            if (x == 0 && y == 0) continue;
            if (y == 0 && x < 0) continue;
            if (2 * 45 * x * y + 22 * y * y != 0) continue;
            if (gcd_int(to_int(x), to_int(y)) != 1) continue;
            ++rays;
            saw_f = saw_f || (x == 1 && y == 0);
            saw_alpha = saw_alpha || (LatVec(to_int(x), to_int(y)) == a.alpha_primitive);
        }
    CHECK(rays == 2);
    CHECK(saw_f);
    CHECK(saw_alpha);

    CHECK_FALSE(isotropic_analysis(Int(2), Int(2)).unique);   // e | 2d
    CHECK_FALSE(isotropic_analysis(Int(6), Int(30)).unique);  // 6 | 60
    CHECK_THROWS_AS(isotropic_analysis(Int(0), Int(3)), precondition_error);
}

TEST_CASE("numeric hypotheses for the Noether-Lefschetz gates") {
    NlHypotheses a = nl_hypotheses(Int(22), Int(20000), 2, Int(2), Rat(120));
    CHECK(a.threshold_pazienza == 1380);
    CHECK(a.d_gt_10e1);
    CHECK(a.e_ndiv_2d);
    CHECK(a.parity_ok);
    CHECK(a.d_gt_half_a0e1);
    CHECK(a.d_gt_pazienza);
    CHECK(a.all());

    NlHypotheses b = nl_hypotheses(Int(22), Int(230), 2, Int(2), Rat(120));
    CHECK_FALSE(b.d_gt_10e1);  // strict inequality at the boundary

    NlHypotheses c = nl_hypotheses(Int(6), Int(61), 2, Int(2), Rat(120));
    CHECK_FALSE(c.parity_ok);

    CHECK_THROWS_AS(nl_hypotheses(Int(6), Int(61), 3, Int(2), Rat(1)), precondition_error);
}
