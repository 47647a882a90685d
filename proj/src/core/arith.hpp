#pragma once

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace graphmatch {

// All counts and invariants are exact. Int is an arbitrary-precision integer,
// Rat an exact rational; no floating point is used anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;

// mpz_class has no long long constructor; long is 64-bit on the platforms
// this library targets, so routing through it is lossless.
inline Int make_int(long long v) {
    static_assert(sizeof(long) >= sizeof(long long));
    return Int(static_cast<long>(v));
}

// C(n, k); zero whenever the pair is outside 0 <= k <= n.
inline Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return result;
}

inline Int int_pow(const Int& base, unsigned long exp) {
    Int result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
    return result;
}

inline bool is_integral(const Rat& q) {
    return mpz_cmp_ui(q.get_den().get_mpz_t(), 1) == 0;
}

// The two-argument mpq_class constructor does not reduce; this does.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw internal_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Conversion that refuses to round: a fractional value here means a bug.
inline Int to_int(const Rat& q) {
    if (!is_integral(q))
        throw internal_error("expected an integer, got " + q.get_str());
    return q.get_num();
}

inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw internal_error("inexact division: " + a.get_str() + " / " + b.get_str());
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Decimal string for integral values, "num/den" otherwise.
inline std::string rat_str(const Rat& q) {
    return is_integral(q) ? q.get_num().get_str() : q.get_str();
}

} // namespace graphmatch
