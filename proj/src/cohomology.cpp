#include "hkmod/cohomology.hpp"

namespace hkmod {

FujikiModel::FujikiModel(GramLattice lat, Rat cx, Rat c2a, Rat c2sq, Rat c4v, Rat chio)
    : lattice(std::move(lat)),
      c_x(std::move(cx)),
      c2_alpha(std::move(c2a)),
      c2_sq(std::move(c2sq)),
      c4(std::move(c4v)),
      chi_o(std::move(chio)) {
    if (c_x <= 0) throw precondition_error("Fujiki constant must be positive");
    if ((3 * c2_sq - c4) / 720 != chi_o)
        throw precondition_error("Todd consistency (3*c2_sq - c4)/720 = chi(O) violated");
}

H2Class H2Class::basis(int rank, int i) {
    H2Class out = zero(rank);
    out.c[i] = 1;
    return out;
}

bool H2Class::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

H4Class H4Class::c2_class(int rank, const Rat& coeff) {
    H4Class out = zero(rank);
    out.c2 = coeff;
    return out;
}

bool H4Class::is_zero() const {
    if (c2 != 0) return false;
    for (const auto& row : sym2)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

static int dim_of(const H2Class& a) { return static_cast<int>(a.c.size()); }

H2Class operator+(const H2Class& a, const H2Class& b) {
    H2Class out = a;
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] += b.c[i];
    return out;
}
H2Class operator-(const H2Class& a, const H2Class& b) { return a + Rat(-1) * b; }
H2Class operator*(const Rat& s, const H2Class& a) {
    H2Class out = a;
    for (auto& x : out.c) x *= s;
    return out;
}

H4Class operator+(const H4Class& a, const H4Class& b) {
    H4Class out = a;
    for (std::size_t i = 0; i < out.sym2.size(); ++i)
        for (std::size_t j = 0; j < out.sym2.size(); ++j) out.sym2[i][j] += b.sym2[i][j];
    out.c2 += b.c2;
    return out;
}
H4Class operator-(const H4Class& a, const H4Class& b) { return a + Rat(-1) * b; }
H4Class operator*(const Rat& s, const H4Class& a) {
    H4Class out = a;
    for (auto& row : out.sym2)
        for (auto& x : row) x *= s;
    out.c2 *= s;
    return out;
}

H6Class operator+(const H6Class& a, const H6Class& b) {
    H6Class out = a;
    const std::size_t n = out.sym3.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out.sym3[i][j][k] += b.sym3[i][j][k];
    out.c2_h2 = out.c2_h2 + b.c2_h2;
    return out;
}
H6Class operator-(const H6Class& a, const H6Class& b) { return a + Rat(-1) * b; }
H6Class operator*(const Rat& s, const H6Class& a) {
    H6Class out = a;
    for (auto& m : out.sym3)
        for (auto& row : m)
            for (auto& x : row) x *= s;
    out.c2_h2 = s * out.c2_h2;
    return out;
}

TopClass operator+(const TopClass& a, const TopClass& b) { return TopClass(a.v + b.v); }
TopClass operator-(const TopClass& a, const TopClass& b) { return TopClass(a.v - b.v); }
TopClass operator*(const Rat& s, const TopClass& a) { return TopClass(s * a.v); }

Rat fujiki4(const FujikiModel& m, const H2Class& a, const H2Class& b, const H2Class& c,
            const H2Class& d) {
    const GramLattice& L = m.lattice;
    return m.c_x * (pair_q(L, a.c, b.c) * pair_q(L, c.c, d.c) +
                    pair_q(L, a.c, c.c) * pair_q(L, b.c, d.c) +
                    pair_q(L, a.c, d.c) * pair_q(L, b.c, c.c));
}

H4Class mul(const FujikiModel& m, const H2Class& a, const H2Class& b) {
    const int n = m.rank();
    if (dim_of(a) != n || dim_of(b) != n) throw precondition_error("H2 class rank mismatch");
    H4Class out = H4Class::zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.sym2[i][j] = (a.c[i] * b.c[j] + a.c[j] * b.c[i]) / 2;
    return out;
}

H6Class mul(const FujikiModel& m, const H2Class& a, const H4Class& b) {
    const int n = m.rank();
    H6Class out = H6Class::zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                out.sym3[i][j][k] =
                    (a.c[i] * b.sym2[j][k] + a.c[j] * b.sym2[i][k] + a.c[k] * b.sym2[i][j]) / 3;
    out.c2_h2 = b.c2 * a;
    return out;
}

Rat integrate(const FujikiModel& m, const H2Class& a, const H6Class& b) {
    const GramLattice& L = m.lattice;
    const int n = m.rank();
    Rat s = 0;
    // sum_{ijk} T_ijk int e_i e_j e_k a, by the polarized Fujiki relation
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Rat& t = b.sym3[i][j][k];
                if (t == 0) continue;
                Rat gij(L.gram[i][j]), qa_i = 0, qa_j = 0, qa_k = 0;
                for (int l = 0; l < n; ++l) {
                    qa_i += Rat(L.gram[i][l]) * a.c[l];
                    qa_j += Rat(L.gram[j][l]) * a.c[l];
                    qa_k += Rat(L.gram[k][l]) * a.c[l];
                }
                s += t * m.c_x *
                     (gij * qa_k + Rat(L.gram[i][k]) * qa_j + Rat(L.gram[j][k]) * qa_i);
            }
    s += m.c2_alpha * pair_q(L, b.c2_h2.c, a.c);
    return s;
}

Rat integrate_c2(const FujikiModel& m, const H4Class& a) {
    const GramLattice& L = m.lattice;
    Rat s = 0;
    for (int i = 0; i < m.rank(); ++i)
        for (int j = 0; j < m.rank(); ++j) s += a.sym2[i][j] * Rat(L.gram[i][j]);
    return m.c2_alpha * s + a.c2 * m.c2_sq;
}

Rat integrate(const FujikiModel& m, const H4Class& a, const H4Class& b) {
    const GramLattice& L = m.lattice;
    const int n = m.rank();
    Rat s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (a.sym2[i][j] == 0) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (b.sym2[k][l] == 0) continue;
                    s += a.sym2[i][j] * b.sym2[k][l] * m.c_x *
                         (Rat(L.gram[i][j]) * Rat(L.gram[k][l]) +
                          Rat(L.gram[i][k]) * Rat(L.gram[j][l]) +
                          Rat(L.gram[i][l]) * Rat(L.gram[j][k]));
                }
        }
    if (a.c2 != 0) s += a.c2 * integrate_c2(m, H4Class(b.sym2, Rat(0)));
    if (b.c2 != 0) s += b.c2 * integrate_c2(m, H4Class(a.sym2, Rat(0)));
    s += a.c2 * b.c2 * m.c2_sq;
    return s;
}

TopClass mul_top(const FujikiModel& m, const H2Class& a, const H6Class& b) {
    return TopClass(integrate(m, a, b));
}
TopClass mul_top(const FujikiModel& m, const H4Class& a, const H4Class& b) {
    return TopClass(integrate(m, a, b));
}

int degree(const GradedClass& x) { return static_cast<int>(x.index()) * 2; }

GradedClass multiply(const FujikiModel& m, const GradedClass& x, const GradedClass& y) {
    const int dx = degree(x), dy = degree(y);
    if (dx + dy > 8) throw precondition_error("graded product exceeds the top degree");
    if (dx > dy) return multiply(m, y, x);
    if (dx == 0) {
        const Rat& s = std::get<Rat>(x);
        switch (dy / 2) {
            case 0: return s * std::get<Rat>(y);
            case 1: return s * std::get<H2Class>(y);
            case 2: return s * std::get<H4Class>(y);
            case 3: return s * std::get<H6Class>(y);
            default: return s * std::get<TopClass>(y);
        }
    }
    if (dx == 2 && dy == 2) return mul(m, std::get<H2Class>(x), std::get<H2Class>(y));
    if (dx == 2 && dy == 4) return mul(m, std::get<H2Class>(x), std::get<H4Class>(y));
    if (dx == 2 && dy == 6) return mul_top(m, std::get<H2Class>(x), std::get<H6Class>(y));
    if (dx == 4 && dy == 4) return mul_top(m, std::get<H4Class>(x), std::get<H4Class>(y));
    throw precondition_error("graded product exceeds the top degree");
}

Rat integrate_top(const FujikiModel& m, const GradedClass& x) {
    (void)m;
    if (degree(x) != 8) throw precondition_error("integrate_top requires a degree-8 class");
    return std::get<TopClass>(x).v;
}

ChernCharacter ChernCharacter::zero(int rank) {
    return ChernCharacter{Rat(0), H2Class::zero(rank), H4Class::zero(rank), H6Class::zero(rank),
                          TopClass{}};
}

ChernCharacter ChernCharacter::structure_sheaf(int rank) {
    ChernCharacter ch = zero(rank);
    ch.ch0 = 1;
    return ch;
}

bool ChernCharacter::operator==(const ChernCharacter& o) const {
    return ch0 == o.ch0 && ch1 == o.ch1 && ch2 == o.ch2 && ch3 == o.ch3 && ch4 == o.ch4;
}

ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b) {
    return ChernCharacter{a.ch0 + b.ch0, a.ch1 + b.ch1, a.ch2 + b.ch2, a.ch3 + b.ch3,
                          a.ch4 + b.ch4};
}

Rat hrr_chi(const FujikiModel& m, const ChernCharacter& ch) {
    return ch.ch4.v + integrate_c2(m, ch.ch2) / 12 + m.chi_o * ch.ch0;
}

}  // namespace hkmod
