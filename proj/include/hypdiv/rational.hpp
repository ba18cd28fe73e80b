#pragma once
// Exact arithmetic primitives shared by every module: arbitrary-precision
// rationals (GMP), binomial coefficients, and fraction parsing/printing.
// No floating point is used anywhere in the library.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hypdiv {

using Integer = mpz_class;
using Rational = mpq_class;

/// C(n, k) as an exact integer; zero for k < 0 or k > n.
inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Exact rational p/q from machine integers.
inline Rational frac(long p, long q) {
    if (q == 0) throw std::invalid_argument("frac: zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline Rational frac(const Integer& p, const Integer& q) {
    if (q == 0) throw std::invalid_argument("frac: zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// Renders in lowest terms as "p" or "p/q" (q > 0).
inline std::string to_fraction_string(const Rational& x) {
    std::string s = x.get_num().get_str();
    if (x.get_den() != 1) {
        s += "/";
        s += x.get_den().get_str();
    }
    return s;
}

/// Parses "p" or "p/q"; inverse of to_fraction_string.
inline Rational parse_fraction(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a fraction: " + text);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

}  // namespace hypdiv
