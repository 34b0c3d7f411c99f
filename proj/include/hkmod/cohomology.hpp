#pragma once

#include <variant>

#include "hkmod/lattice.hpp"
#include "hkmod/rational.hpp"

namespace hkmod {

// Evaluation-only model of the even cohomology of a hyperkahler fourfold of
// type K3^[2].  Degree-2 classes are rational vectors over a chosen
// sublattice of H^2 carrying the BBF form; c_2(X) is a formal symbol with
// declared pairings, never expanded in Sym^2 H^2.  All top-degree integrals
// reduce to the Fujiki relation
//     int a.b.c.d = c_X (q(a,b)q(c,d) + q(a,c)q(b,d) + q(a,d)q(b,c))
// together with int c2.a.b = 30 q(a,b) and int c2^2 = 828.
struct FujikiModel {
    GramLattice lattice;
    Rat c_x;        // normalized Fujiki constant, 1 for K3^[2]
    Rat c2_alpha;   // int c2 . a . b = c2_alpha * q(a,b)
    Rat c2_sq;      // int c2^2
    Rat c4;         // int c4(X); pinned by chi(O_X) via the Todd integral
    Rat chi_o;      // chi(O_X) = int td_4

    // Validates the Todd consistency (3*c2_sq - c4)/720 = chi_o at
    // construction and rejects inconsistent data.
    explicit FujikiModel(GramLattice lat, Rat cx = Rat(1), Rat c2a = Rat(30),
                         Rat c2sq = Rat(828), Rat c4v = Rat(324), Rat chio = Rat(3));

    int rank() const { return lattice.rank(); }
};

struct H2Class {
    RatVec c;

    H2Class() = default;
    explicit H2Class(RatVec v) : c(std::move(v)) {}
    static H2Class zero(int rank) { return H2Class(rat_vec(rank)); }
    static H2Class basis(int rank, int i);

    bool is_zero() const;
    bool operator==(const H2Class& o) const { return c == o.c; }
};

struct H4Class {
    RatMat sym2;  // symmetric
    Rat c2 = 0;   // coefficient of the formal c2(X)

    H4Class() = default;
    H4Class(RatMat s, Rat c) : sym2(std::move(s)), c2(std::move(c)) {}
    static H4Class zero(int rank) { return H4Class(rat_mat(rank), Rat(0)); }
    static H4Class c2_class(int rank, const Rat& coeff = Rat(1));

    bool is_zero() const;
    bool operator==(const H4Class& o) const { return sym2 == o.sym2 && c2 == o.c2; }
};

struct H6Class {
    RatTen3 sym3;   // symmetric
    H2Class c2_h2;  // coefficient of c2 . (-)

    H6Class() = default;
    H6Class(RatTen3 s, H2Class v) : sym3(std::move(s)), c2_h2(std::move(v)) {}
    static H6Class zero(int rank) { return H6Class(rat_ten3(rank), H2Class::zero(rank)); }

    bool operator==(const H6Class& o) const { return sym3 == o.sym3 && c2_h2 == o.c2_h2; }
};

struct TopClass {
    Rat v = 0;  // multiple of the point class eta_X

    TopClass() = default;
    explicit TopClass(Rat x) : v(std::move(x)) {}
    bool operator==(const TopClass& o) const { return v == o.v; }
};

H2Class operator+(const H2Class&, const H2Class&);
H2Class operator-(const H2Class&, const H2Class&);
H2Class operator*(const Rat&, const H2Class&);
H4Class operator+(const H4Class&, const H4Class&);
H4Class operator-(const H4Class&, const H4Class&);
H4Class operator*(const Rat&, const H4Class&);
H6Class operator+(const H6Class&, const H6Class&);
H6Class operator-(const H6Class&, const H6Class&);
H6Class operator*(const Rat&, const H6Class&);
TopClass operator+(const TopClass&, const TopClass&);
TopClass operator-(const TopClass&, const TopClass&);
TopClass operator*(const Rat&, const TopClass&);

Rat fujiki4(const FujikiModel& m, const H2Class& a, const H2Class& b, const H2Class& c,
            const H2Class& d);

// Graded products.
H4Class mul(const FujikiModel& m, const H2Class& a, const H2Class& b);
H6Class mul(const FujikiModel& m, const H2Class& a, const H4Class& b);
TopClass mul_top(const FujikiModel& m, const H2Class& a, const H6Class& b);
TopClass mul_top(const FujikiModel& m, const H4Class& a, const H4Class& b);

// Top-degree evaluation.
Rat integrate(const FujikiModel& m, const H2Class& a, const H6Class& b);
Rat integrate(const FujikiModel& m, const H4Class& a, const H4Class& b);
Rat integrate_c2(const FujikiModel& m, const H4Class& a);  // int c2 . a

// Generic graded class for callers that manipulate classes by degree.
// Degree 0 is a rational multiple of 1.
using GradedClass = std::variant<Rat, H2Class, H4Class, H6Class, TopClass>;

int degree(const GradedClass& x);  // 0, 2, 4, 6, 8
GradedClass multiply(const FujikiModel& m, const GradedClass& x, const GradedClass& y);
Rat integrate_top(const FujikiModel& m, const GradedClass& x);  // degree must be 8

struct ChernCharacter {
    Rat ch0;
    H2Class ch1;
    H4Class ch2;
    H6Class ch3;
    TopClass ch4;

    static ChernCharacter zero(int rank);
    static ChernCharacter structure_sheaf(int rank);  // (1,0,0,0,0)
    bool operator==(const ChernCharacter& o) const;
};

ChernCharacter operator+(const ChernCharacter&, const ChernCharacter&);

// Hirzebruch-Riemann-Roch on a hyperkahler fourfold: td_1 = td_3 = 0,
// td_2 = c2/12 and int td_4 = chi(O_X), so
//     chi = int ch4 + (1/12) int c2 . ch2 + chi(O_X) * ch0.
Rat hrr_chi(const FujikiModel& m, const ChernCharacter& ch);

}  // namespace hkmod
