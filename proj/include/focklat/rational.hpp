#pragma once

#include <gmpxx.h>

#include <string>

#include "focklat/errors.hpp"

namespace focklat {

// All arithmetic in this library is exact.  Rationals are GMP mpq values,
// kept canonical (reduced, positive denominator) by mpq_class itself.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// "num/den" with the denominator always present, e.g. "-1/1", "2/3".
inline std::string rational_to_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "num/den" or a bare integer string.
inline Rational rational_from_string(const std::string& s)
{
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw input_error("malformed rational: '" + s + "'");
    }
}

inline Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// C(n, k); zero when k > n.
inline Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace focklat
