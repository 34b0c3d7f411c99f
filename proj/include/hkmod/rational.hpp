#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hkmod {

// All arithmetic in the library is exact: arbitrary-precision integers and
// rationals, no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

struct precondition_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// mpq_class(num, den) does not canonicalize; this does.
inline Rat frac(const Int& num, const Int& den) {
    if (den == 0) throw precondition_error("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int floor_int(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

// mpz_class has no long long constructor; on LP64 long suffices.
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// n*(n-1)*...*(n-k+1)/k! for small k; only k=2 is needed.
inline Int binom2(const Int& n) { return n * (n - 1) / 2; }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Accepts "p", "-p", "p/q".
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw usage_error("empty rational literal");
    try {
        Rat r(s);
        if (r.get_den() == 0) throw usage_error("zero denominator: " + s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw usage_error("malformed rational literal: " + s);
    }
}

inline Int parse_int(const std::string& s) {
    Rat r = parse_rat(s);
    if (!is_integer(r)) throw usage_error("expected an integer, got: " + s);
    return r.get_num();
}

using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>;
using RatTen3 = std::vector<std::vector<std::vector<Rat>>>;

inline RatVec rat_vec(std::size_t n) { return RatVec(n, Rat(0)); }
inline RatMat rat_mat(std::size_t n) { return RatMat(n, RatVec(n, Rat(0))); }
inline RatTen3 rat_ten3(std::size_t n) {
    return RatTen3(n, RatMat(n, RatVec(n, Rat(0))));
}

}  // namespace hkmod
