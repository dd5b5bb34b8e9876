#ifndef TRIJAC_SERIES_HPP
#define TRIJAC_SERIES_HPP

#include <cstddef>
#include <vector>

#include "trijac/poly.hpp"
#include "trijac/rational.hpp"

namespace trijac {

inline constexpr unsigned kDefaultSeriesOrder = 12;

/// Truncated formal power series in w with polynomial-in-x coefficients.
/// Coefficients of w^0..w^order are stored; everything combines only with
/// series of the same order.
class Series {
 public:
  explicit Series(unsigned order);
  Series(unsigned order, std::vector<Poly> coefficients);

  /// c (a constant in both w and x)
  static Series constant(unsigned order, const Rational& c);
  /// 1 - 2 x w + w^2
  static Series gegenbauer_base(unsigned order);

  unsigned order() const { return order_; }
  const Poly& operator[](std::size_t n) const { return coeffs_.at(n); }
  const std::vector<Poly>& coefficients() const { return coeffs_; }

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Rational& c);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Rational& c) { return a *= c; }
  friend Series operator*(const Series& a, const Series& b);

  friend bool operator==(const Series& a, const Series& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void require_same_order(const Series& other) const;

  unsigned order_;
  std::vector<Poly> coeffs_;
};

/// Cauchy product truncated at the common order. Throws std::invalid_argument
/// on an order mismatch.
Series series_mul(const Series& s, const Series& t);

/// Multiplicative inverse. The constant coefficient must be a nonzero
/// constant polynomial.
Series series_recip(const Series& s);

/// (1 + u)^e via the binomial series, u = s - 1. The constant coefficient of
/// s must be exactly 1.
Series series_pow(const Series& s, const Rational& e);

/// Sum of P_n^(alpha,beta)(x) w^n, built from R = (1 - 2xw + w^2)^(1/2) as
/// R^-1 (1 + (R - w - 1)/2)^-alpha (1 + (R + w - 1)/2)^-beta.
Series jacobi_generating(const Rational& alpha, const Rational& beta, unsigned order);

/// (1 - 2xw + w^2)^-lambda
Series gegenbauer_generating(const Rational& lambda, unsigned order);

}  // namespace trijac

#endif  // TRIJAC_SERIES_HPP
