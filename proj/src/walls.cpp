#include "hkmod/walls.hpp"

#include <algorithm>

namespace hkmod {

std::vector<Wall> awalls(const GramLattice& L, const Rat& a) {
    std::vector<Wall> out;
    for (const LatVec& g : enumerate_negative_classes(L, a)) {
        LatVec p = primitive_part(g);
        Wall w{p, square_q(L, p)};
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
    std::sort(out.begin(), out.end(),
              [](const Wall& x, const Wall& y) { return x.lam < y.lam; });
    return out;
}

static int sign_of(const Int& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Reference positive class used to fix the component of the positive cone:
// h = (0,1) when q(h) = e > 0, else f + h which has q = 2d > 0.
static LatVec reference_positive(const GramLattice& L) {
    if (L.hyp_e() > 0) return LatVec(Int(0), Int(1));
    return LatVec(Int(1), Int(1));
}

static void check_positive_cone(const GramLattice& L, const LatVec& v, const char* what) {
    if (square_q(L, v) <= 0)
        throw precondition_error(std::string(what) + " must have positive square");
    if (pair_q(L, v, reference_positive(L)) <= 0)
        throw precondition_error(std::string(what) +
                                 " must lie in the positive cone component of ample classes");
}

bool same_chamber(const GramLattice& L, const Rat& a, const LatVec& h0, const LatVec& h1) {
    check_positive_cone(L, h0, "h0");
    check_positive_cone(L, h1, "h1");
    for (const Wall& w : awalls(L, a)) {
        int s0 = sign_of(pair_q(L, w.lam, h0));
        int s1 = sign_of(pair_q(L, w.lam, h1));
        if (s0 * s1 < 0) return false;
        if ((s0 == 0) != (s1 == 0)) return false;
    }
    return true;
}

bool suitable(const GramLattice& L, const Rat& a, const LatVec& h, const LatVec& f) {
    check_positive_cone(L, h, "h");
    if (square_q(L, f) != 0) throw precondition_error("f must be isotropic");
    for (const Wall& w : awalls(L, a)) {
        int sh = sign_of(pair_q(L, w.lam, h));
        int sf = sign_of(pair_q(L, w.lam, f));
        bool ok = (sh == sf && sh != 0) || (sh == 0 && sf == 0);
        if (!ok) return false;
    }
    return true;
}

DestabilizerWindow destabilizer_window(const FujikiModel& m, const ChernCharacter& chE,
                                       const ChernCharacter& chF, const Rat& dF) {
    if (!(chE.ch0 > 0 && chE.ch0 < chF.ch0))
        throw precondition_error("destabilizer window requires 0 < r(E) < r(F)");
    DestabilizerWindow out;
    out.lambda = lambda_class(chE, chF);
    out.q_lambda = square_q(m.lattice, out.lambda.c);
    out.a_F = a_value(m, chF, dF);
    bool zero_ok = out.q_lambda != 0 || out.lambda.is_zero();
    out.in_window = -out.a_F <= out.q_lambda && out.q_lambda <= 0 && zero_ok;
    return out;
}

}  // namespace hkmod
