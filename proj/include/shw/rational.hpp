#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace shw {

// Exact arbitrary-precision rational. Every Hurwitz value in this library
// is one of these; floating point appears only in the trflow module.
using Rational = mpq_class;
using Integer = mpz_class;

Integer factorial(unsigned n);

// base^e with e possibly negative (base must be nonzero then).
Rational pow_rational(const Rational& base, long e);

inline Rational pow_int(long base, long e) {
    Rational r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

// (-1)^k as a rational-friendly int.
inline int neg_one_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

// Canonical "p/q" rendering, q > 0, lowest terms ("-6/1", "2/3").
std::string format_fraction(const Rational& q);

// "p/q" or bare integer "p".
Rational parse_fraction(const std::string& text);

}  // namespace shw
