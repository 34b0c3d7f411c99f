#include "hkmod/blowup.hpp"

namespace hkmod {

BlowupRing::BlowupRing(Int m0) : m0_(std::move(m0)) {
    if (m0_ < 1) throw precondition_error("blow-up ring requires m0 >= 1");
}

BlowupClass BlowupClass::monomial(int a, int b, int j, const Rat& coeff) {
    if (a < 0 || a > 2 || b < 0 || b > 2 || j < 0 || j > 4 || a + b + j > 4)
        throw precondition_error("monomial out of range");
    BlowupClass out;
    out.c[a][b][j] = coeff;
    return out;
}

BlowupClass BlowupClass::degree_part(int k) const {
    BlowupClass out;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int j = 0; j <= 4; ++j)
                if (a + b + j == k) out.c[a][b][j] = c[a][b][j];
    return out;
}

bool BlowupClass::is_zero() const {
    for (const auto& pa : c)
        for (const auto& pb : pa)
            for (const auto& x : pb)
                if (x != 0) return false;
    return true;
}

BlowupClass operator+(const BlowupClass& x, const BlowupClass& y) {
    BlowupClass out = x;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int j = 0; j <= 4; ++j) out.c[a][b][j] += y.c[a][b][j];
    return out;
}

BlowupClass operator-(const BlowupClass& x, const BlowupClass& y) {
    return x + Rat(-1) * y;
}

BlowupClass operator*(const Rat& s, const BlowupClass& x) {
    BlowupClass out = x;
    for (auto& pa : out.c)
        for (auto& pb : pa)
            for (auto& v : pb) v *= s;
    return out;
}

BlowupClass mul(const BlowupRing& R, const BlowupClass& x, const BlowupClass& y) {
    const Rat dd(2 * R.m0());  // u1 . u1 = 2 m0 u2
    BlowupClass out;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int j = 0; j <= 4; ++j) {
                const Rat& xc = x.c[a][b][j];
                if (xc == 0) continue;
                for (int a2 = 0; a2 + a <= 2; ++a2)
                    for (int b2 = 0; b2 + b <= 2; ++b2)
                        for (int j2 = 0; j2 + j <= 4; ++j2) {
                            const Rat& yc = y.c[a2][b2][j2];
                            if (yc == 0) continue;
                            if (a + a2 + b + b2 + j + j2 > 4) continue;
                            Rat t = xc * yc;
                            if (a == 1 && a2 == 1) t *= dd;
                            if (b == 1 && b2 == 1) t *= dd;
                            out.c[a + a2][b + b2][j + j2] += t;
                        }
            }
    return out;
}

Rat eval_top_blowup(const BlowupRing& R, const BlowupClass& x) {
    for (int k = 0; k <= 3; ++k)
        if (!x.degree_part(k).is_zero())
            throw precondition_error("eval_top_blowup requires a pure degree-8 class");
    Rat s = 0;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            int j = 4 - a - b;
            const Rat& v = x.c[a][b][j];
            if (v == 0) continue;
            switch (j) {
                case 0:
                    if (a == 2 && b == 2) s += v;
                    break;
                case 2: {
                    // int e^2 q1*x q2*y = -int_S(x.y)
                    if (a == 1 && b == 1) s += v * Rat(-2 * R.m0());
                    else s += v * Rat(-1);
                    break;
                }
                case 4:
                    s += v * 24;
                    break;
                default:  // j = 1, 3
                    break;
            }
        }
    return s;
}

static void require_hilb2_model(const BlowupRing& R, const FujikiModel& m) {
    bool ok = m.rank() == 2 && m.lattice.gram[0][0] == 2 * R.m0() &&
              m.lattice.gram[0][1] == 0 && m.lattice.gram[1][1] == -2;
    if (!ok)
        throw precondition_error(
            "pullback is defined over the (mu(D), delta) model with D^2 = 2 m0");
}

BlowupClass pullback_h2(const BlowupRing& R, const H2Class& a) {
    (void)R;
    if (a.c.size() != 2) throw precondition_error("unsupported basis element");
    // mu(D) -> q1*D + q2*D, delta -> e
    BlowupClass out = a.c[0] * (BlowupClass::monomial(1, 0, 0) + BlowupClass::monomial(0, 1, 0));
    return out + a.c[1] * BlowupClass::monomial(0, 0, 1);
}

static BlowupClass pullback_c2() {
    // 24(q1*eta + q2*eta) - 3 e^2
    return Rat(24) * (BlowupClass::monomial(2, 0, 0) + BlowupClass::monomial(0, 2, 0)) +
           Rat(-3) * BlowupClass::monomial(0, 0, 2);
}

BlowupClass pullback_ch(const BlowupRing& R, const FujikiModel& m, const ChernCharacter& ch) {
    require_hilb2_model(R, m);
    BlowupClass out = BlowupClass::monomial(0, 0, 0, ch.ch0);
    out = out + pullback_h2(R, ch.ch1);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const Rat& t = ch.ch2.sym2[i][j];
            if (t == 0) continue;
            out = out + t * mul(R, pullback_h2(R, H2Class::basis(2, i)),
                                pullback_h2(R, H2Class::basis(2, j)));
        }
    out = out + ch.ch2.c2 * pullback_c2();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                const Rat& t = ch.ch3.sym3[i][j][k];
                if (t == 0) continue;
                BlowupClass e_i = pullback_h2(R, H2Class::basis(2, i));
                BlowupClass e_j = pullback_h2(R, H2Class::basis(2, j));
                BlowupClass e_k = pullback_h2(R, H2Class::basis(2, k));
                out = out + t * mul(R, e_i, mul(R, e_j, e_k));
            }
    if (!ch.ch3.c2_h2.is_zero())
        out = out + mul(R, pullback_c2(), pullback_h2(R, ch.ch3.c2_h2));
    // deg p = 2, so a top class of integral v pulls back to integral 2v.
    out = out + BlowupClass::monomial(2, 2, 0, 2 * ch.ch4.v);
    return out;
}

BlowupClass grr_hilb2(const Int& r0, const Int& m0, Sign s) {
    if (r0 < 1) throw precondition_error("r0 must be >= 1");
    if (m0 < 1) throw precondition_error("m0 must be >= 1");
    if ((m0 + 1) % r0 != 0) throw precondition_error("grr_hilb2 requires r0 | m0 + 1");
    BlowupRing R(m0);
    const Int s0 = (m0 + 1) / r0;
    const Rat ch2F(s0 - r0);  // ch2(F) = (s0 - r0) eta

    // A = q1*ch(F) . q2*ch(F) with ch(F) = r0 + D + (s0 - r0) eta.
    BlowupClass chF_1 = BlowupClass::monomial(0, 0, 0, Rat(r0)) + BlowupClass::monomial(1, 0, 0) +
                        BlowupClass::monomial(2, 0, 0, ch2F);
    BlowupClass chF_2 = BlowupClass::monomial(0, 0, 0, Rat(r0)) + BlowupClass::monomial(0, 1, 0) +
                        BlowupClass::monomial(0, 2, 0, ch2F);
    BlowupClass a_part = mul(R, chF_1, chF_2);

    // Correction prefactor: ch of wedge^2 F ("+") or Sym^2 F ("-") pulled
    // back from the diagonal, written as 1/2(q1* + q2*) of the S-classes.
    Int rr = (s == Sign::plus) ? r0 : Int(r0 + 1);           // C(r0,2) vs C(r0+1,2)
    Rat lin = (s == Sign::plus) ? frac(r0 - 1, Int(2)) : frac(r0 + 1, Int(2));
    Rat quad_c = (s == Sign::plus) ? Rat(2 * r0 - 4) : Rat(2 * r0 + 4);
    Rat quad = (quad_c * ch2F + Rat(2 * m0)) / 4;       // per-side eta coefficient
    BlowupClass pref = BlowupClass::monomial(0, 0, 0, Rat(binom2(rr)));
    pref = pref + lin * (BlowupClass::monomial(1, 0, 0) + BlowupClass::monomial(0, 1, 0));
    pref = pref + quad * (BlowupClass::monomial(2, 0, 0) + BlowupClass::monomial(0, 2, 0));

    BlowupClass eseries;
    eseries.c[0][0][1] = Rat(1);
    eseries.c[0][0][2] = frac(Int(-1), Int(2));
    eseries.c[0][0][3] = frac(Int(1), Int(6));
    eseries.c[0][0][4] = frac(Int(-1), Int(24));

    return a_part - mul(R, pref, eseries);
}

BlowupClass relation_isouno(const BlowupRing& R) {
    (void)R;
    // 2(q1*eta q2*D + q1*D q2*eta) + (q1*D + q2*D) e^2
    BlowupClass r;
    r.c[2][1][0] = 2;
    r.c[1][2][0] = 2;
    r.c[1][0][2] = 1;
    r.c[0][1][2] = 1;
    return r;
}

BlowupClass relation_isodue(const BlowupRing& R) {
    BlowupClass r;
    r.c[1][1][1] = 12;            // 12 q1*D . q2*D . e
    r.c[0][0][3] = Rat(R.m0());   // m0 e^3
    return r;
}

BlowupClass relation_isodue_alt(const BlowupRing& R) {
    BlowupClass r;
    r.c[2][0][1] = Rat(24 * R.m0());  // 12 q1*(D^2) . e = 24 m0 q1*eta . e
    r.c[0][0][3] = Rat(R.m0());
    return r;
}

static bool pairs_to_zero(const BlowupRing& R, const BlowupClass& rel, int deg) {
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int j = 0; j <= 4; ++j) {
                if (a + b + j != 4 - deg) continue;
                if (eval_top_blowup(R, mul(R, rel, BlowupClass::monomial(a, b, j))) != 0)
                    return false;
            }
    return true;
}

OracleReport oracle_compare(const Int& r0, const Int& m0, Sign s) {
    BlowupRing R(m0);
    OracleReport rep{r0, m0, s, true, true, true, true, {}};

    BlowupClass via_grr = grr_hilb2(r0, m0, s);
    Hilb2Character hc = hilb2_chern(r0, m0, s);
    BlowupClass via_ch = pullback_ch(R, hc.model, hc.ch);

    for (int k = 0; k <= 4; ++k) {
        BlowupClass gk = via_grr.degree_part(k);
        BlowupClass ck = via_ch.degree_part(k);
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                for (int j = 0; j <= 4; ++j) {
                    if (a + b + j != 4 - k) continue;
                    BlowupClass mono = BlowupClass::monomial(a, b, j);
                    Rat g = eval_top_blowup(R, mul(R, gk, mono));
                    Rat c = eval_top_blowup(R, mul(R, ck, mono));
                    if (g != c) {
                        rep.chern_match = false;
                        rep.mismatches.push_back(OracleMismatch{2 * k, a, b, j, g, c});
                    }
                }
    }

    rep.isouno_ok = pairs_to_zero(R, relation_isouno(R), 3);
    rep.isodue_ok =
        pairs_to_zero(R, relation_isodue(R), 3) && pairs_to_zero(R, relation_isodue_alt(R), 3);

    Rat e4 = eval_top_blowup(R, BlowupClass::monomial(0, 0, 4));
    H2Class delta = H2Class::basis(2, 1);
    rep.e4_ok = (e4 == 24) && (e4 == 2 * fujiki4(hc.model, delta, delta, delta, delta));
    return rep;
}

}  // namespace hkmod
