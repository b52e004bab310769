#pragma once

#include <gmpxx.h>

#include <string>

namespace syngular {

// All counts in this project are exact: arbitrary-precision integers and
// rationals throughout. n! overflows 64 bits at n = 21, so fixed-width
// arithmetic is banned from every counting path.
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int two_pow(unsigned long e) { return int_pow(2, e); }

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

/// Decimal string, "p" when integral and "p/q" otherwise.
inline std::string rat_to_string(const Rat& q) {
    if (is_integral(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace syngular
