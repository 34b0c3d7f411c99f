#include <doctest.h>

#include <random>

#include "hkmod/cohomology.hpp"

using namespace hkmod;

namespace {

FujikiModel model22() { return FujikiModel(GramLattice({{Int(22)}})); }

H2Class rv(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> c(-5, 5);
    H2Class out = H2Class::zero(n);
    for (auto& x : out.c) x = c(rng);
    return out;
}

}  // namespace

TEST_CASE("Fujiki evaluation of fourfold products") {
    FujikiModel m(GramLattice({{Int(-2)}}));  // the exceptional half-diagonal
    H2Class d = H2Class::basis(1, 0);
    CHECK(fujiki4(m, d, d, d, d) == 12);  // 3 q(d)^2

    FujikiModel mh(GramLattice::hyperbolic_pair(Int(7), Int(4)));
    H2Class f = H2Class::basis(2, 0), h = H2Class::basis(2, 1);
    CHECK(fujiki4(mh, h, h, f, f) == 98);  // e*0 + d^2 + d^2
    CHECK(fujiki4(mh, h, h, h, H2Class::zero(2)) == 0);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        H2Class a = rv(rng, 2), b = rv(rng, 2), c = rv(rng, 2), e = rv(rng, 2);
        Rat base = fujiki4(mh, a, b, c, e);
        CHECK(base == fujiki4(mh, b, a, c, e));
        CHECK(base == fujiki4(mh, e, c, b, a));
        CHECK(base == fujiki4(mh, a, c, b, e));
        // multilinearity in the first slot
        CHECK(fujiki4(mh, a + b, b, c, e) == base + fujiki4(mh, b, b, c, e));
        CHECK(fujiki4(mh, Rat(3) * a, b, c, e) == 3 * base);
    }
}

TEST_CASE("graded products and top evaluation") {
    FujikiModel m = model22();
    H2Class h = H2Class::basis(1, 0);
    H4Class hh = mul(m, h, h);
    CHECK(hh.sym2[0][0] == 1);
    CHECK(hh.c2 == 0);
    CHECK(integrate(m, hh, hh) == 3 * Rat(22) * Rat(22));  // int h^4

    H4Class c2 = H4Class::c2_class(1);
    CHECK(integrate(m, c2, c2) == 828);
    CHECK(integrate_c2(m, hh) == 660);  // 30 q(h)
    FujikiModel md(GramLattice({{Int(-2)}}));
    H2Class dl = H2Class::basis(1, 0);
    CHECK(integrate_c2(md, mul(md, dl, dl)) == -60);

    // (h (x) h) . (h (x) h) as H4 x H4 equals fujiki4(h,h,h,h) = 3 e^2
    FujikiModel me(GramLattice({{Int(5)}}));
    H2Class he = H2Class::basis(1, 0);
    CHECK(integrate(me, mul(me, he, he), mul(me, he, he)) == 75);

    // linearity and symmetry of the pairing
    std::mt19937_64 rng(11);
    FujikiModel mh(GramLattice::hyperbolic_pair(Int(3), Int(2)));
    for (int t = 0; t < 50; ++t) {
        H2Class a = rv(rng, 2), b = rv(rng, 2), c = rv(rng, 2);
        H4Class ab = mul(mh, a, b);
        H6Class abc = mul(mh, a, mul(mh, b, c));
        CHECK(integrate(mh, c, mul(mh, a, ab)) == integrate(mh, a, mul(mh, c, ab)));
        CHECK(integrate(mh, mul(mh, a, b), mul(mh, c, c)) ==
              integrate(mh, mul(mh, c, c), mul(mh, a, b)));
        CHECK(integrate(mh, a, abc + abc) == 2 * integrate(mh, a, abc));
    }
}

TEST_CASE("generic graded multiply respects degrees") {
    FujikiModel m = model22();
    H2Class h = H2Class::basis(1, 0);
    GradedClass g2 = h;
    GradedClass g4 = mul(m, h, h);
    GradedClass g6 = mul(m, h, mul(m, h, h));
    CHECK(degree(g2) == 2);
    CHECK(degree(multiply(m, g2, g2)) == 4);
    CHECK(degree(multiply(m, g2, g4)) == 6);
    CHECK(degree(multiply(m, g4, g4)) == 8);
    CHECK(std::get<TopClass>(multiply(m, g2, g6)).v == 3 * Rat(22) * Rat(22));
    CHECK(std::get<H2Class>(multiply(m, GradedClass(Rat(5)), g2)).c[0] == 5);
    CHECK(integrate_top(m, multiply(m, g4, g4)) == 3 * Rat(22) * Rat(22));
    CHECK_THROWS_AS(multiply(m, g4, g6), precondition_error);
    CHECK_THROWS_AS(multiply(m, g6, g6), precondition_error);
    CHECK_THROWS_AS(integrate_top(m, g6), precondition_error);
    // c2 . c2 is consumed only at the top degree
    GradedClass c2 = H4Class::c2_class(1);
    CHECK(integrate_top(m, multiply(m, c2, c2)) == 828);
}

TEST_CASE("Todd consistency is enforced at construction") {
    CHECK_NOTHROW(FujikiModel(GramLattice({{Int(22)}})));
    CHECK_THROWS_AS(FujikiModel(GramLattice({{Int(22)}}), Rat(1), Rat(30), Rat(829), Rat(324),
                                Rat(3)),
                    precondition_error);
    CHECK_THROWS_AS(FujikiModel(GramLattice({{Int(22)}}), Rat(-1)), precondition_error);
}

TEST_CASE("Hirzebruch-Riemann-Roch on the model") {
    FujikiModel m = model22();
    CHECK(hrr_chi(m, ChernCharacter::structure_sheaf(1)) == 3);

    ChernCharacter c = ChernCharacter::zero(1);
    c.ch2 = H4Class::c2_class(1);
    CHECK(hrr_chi(m, c) == 69);  // 828/12

    ChernCharacter t = ChernCharacter::zero(1);
    t.ch4 = TopClass(frac(Int(-9), Int(7)));
    CHECK(hrr_chi(m, t) == frac(Int(-9), Int(7)));
}
