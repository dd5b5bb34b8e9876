#ifndef TRIJAC_RATIONAL_HPP
#define TRIJAC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace trijac {

/// Exact rational scalar. Values produced by this library are always in
/// canonical form (reduced, positive denominator, zero is 0/1).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p", "p/q" or "-p/q". Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Exact value of a decimal literal such as "0.75", "-2.5e3" or "1e-4".
/// Throws std::invalid_argument on anything else.
Rational parse_decimal(std::string_view text);

/// Canonical "p/q" rendering; integers render without a denominator.
std::string to_string(const Rational& r);

/// Scientific decimal rendering with `digits` significant digits, computed
/// from the exact value (no intermediate floating point).
std::string to_decimal_string(const Rational& r, int digits = 40);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Value of an integral rational. Throws std::domain_error when `r` is not an
/// integer or does not fit.
long to_long(const Rational& r);

/// a^e for integer e; a must be nonzero when e < 0.
Rational power(const Rational& a, long e);

/// Shifted factorial (a)_k = a(a+1)...(a+k-1), (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned k);

Rational factorial(unsigned k);

/// Generalized binomial coefficient e(e-1)...(e-k+1)/k! for rational e.
Rational binomial(const Rational& e, unsigned k);

}  // namespace trijac

#endif  // TRIJAC_RATIONAL_HPP
