#ifndef TRIJAC_POLY_HPP
#define TRIJAC_POLY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trijac/rational.hpp"

namespace trijac {

/// Dense univariate polynomial in x over the rationals.
///
/// Coefficient i multiplies x^i. The stored vector never ends in a zero, so
/// the zero polynomial is the empty vector and has no integer degree.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);

  static Poly constant(const Rational& c);
  static Poly x();
  static Poly monomial(const Rational& c, std::size_t k);
  /// c0 + c1 x
  static Poly linear(const Rational& c0, const Rational& c1);

  /// nullopt stands for the degree of the zero polynomial (minus infinity).
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of x^i; zero past the degree.
  Rational coefficient(std::size_t i) const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);
  Poly& operator/=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator/(Poly a, const Rational& c) { return a /= c; }
  friend Poly operator-(Poly a);

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  Poly pow(unsigned e) const;
  /// p(-x)
  Poly reflect() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Horner evaluation.
Rational poly_eval(const Poly& p, const Rational& x0);

/// order-th derivative in x.
Poly poly_derivative(const Poly& p, unsigned order = 1);

/// Lowest-degree-first coefficient list separated by single spaces; "0" for
/// the zero polynomial.
std::string to_string(const Poly& p);

}  // namespace trijac

#endif  // TRIJAC_POLY_HPP
