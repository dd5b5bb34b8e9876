#include "trijac/series.hpp"

#include <stdexcept>
#include <string>

namespace trijac {

Series::Series(unsigned order) : order_(order), coeffs_(order + 1) {}

Series::Series(unsigned order, std::vector<Poly> coefficients)
    : order_(order), coeffs_(std::move(coefficients)) {
  coeffs_.resize(order_ + 1);
}

Series Series::constant(unsigned order, const Rational& c) {
  Series s(order);
  s.coeffs_[0] = Poly::constant(c);
  return s;
}

Series Series::gegenbauer_base(unsigned order) {
  Series s(order);
  s.coeffs_[0] = Poly::constant(1);
  if (order >= 1) s.coeffs_[1] = Poly::monomial(-2, 1);
  if (order >= 2) s.coeffs_[2] = Poly::constant(1);
  return s;
}

void Series::require_same_order(const Series& other) const {
  if (order_ != other.order_) {
    throw std::invalid_argument("series order mismatch: " + std::to_string(order_) + " vs " +
                                std::to_string(other.order_));
  }
}

Series& Series::operator+=(const Series& other) {
  require_same_order(other);
  for (std::size_t i = 0; i <= order_; ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& other) {
  require_same_order(other);
  for (std::size_t i = 0; i <= order_; ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Series& Series::operator*=(const Rational& c) {
  for (auto& p : coeffs_) p *= c;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  a.require_same_order(b);
  Series out(a.order_);
  for (std::size_t i = 0; i <= a.order_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= a.order_; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

Series series_mul(const Series& s, const Series& t) { return s * t; }

Series series_recip(const Series& s) {
  const Poly& c0 = s[0];
  if (c0.is_zero() || !c0.is_constant()) {
    throw std::invalid_argument("series_recip: constant coefficient must be a nonzero constant");
  }
  const Rational inv = Rational(1) / c0.coefficient(0);
  std::vector<Poly> g(s.order() + 1);
  g[0] = Poly::constant(inv);
  for (unsigned n = 1; n <= s.order(); ++n) {
    Poly acc;
    for (unsigned k = 1; k <= n; ++k) {
      if (!s[k].is_zero()) acc += s[k] * g[n - k];
    }
    g[n] = acc * (-inv);
  }
  return Series(s.order(), std::move(g));
}

Series series_pow(const Series& s, const Rational& e) {
  if (s[0] != Poly::constant(1)) {
    throw std::invalid_argument("series_pow: constant coefficient must be exactly 1");
  }
  const unsigned order = s.order();
  Series u = s - Series::constant(order, 1);
  // u has no w^0 term, so u^k starts at w^k and the sum stops at k = order.
  Series result = Series::constant(order, 1);
  Series u_power = Series::constant(order, 1);
  for (unsigned k = 1; k <= order; ++k) {
    u_power = u_power * u;
    const Rational c = binomial(e, k);
    if (c == 0) break;  // e is a nonnegative integer below k
    result += u_power * c;
  }
  return result;
}

Series jacobi_generating(const Rational& alpha, const Rational& beta, unsigned order) {
  const Series base = Series::gegenbauer_base(order);
  const Series root = series_pow(base, Rational(1, 2));
  Series w(order);
  if (order >= 1) w = Series(order, {Poly(), Poly::constant(1)});
  const Series one = Series::constant(order, 1);
  // 1 - w + R = 2 (1 + s1), 1 + w + R = 2 (1 + s2); the powers of 2 cancel
  // against the 2^(alpha+beta) prefactor.
  const Series s1 = (root - w - one) * Rational(1, 2);
  const Series s2 = (root + w - one) * Rational(1, 2);
  return series_recip(root) * series_pow(one + s1, -alpha) * series_pow(one + s2, -beta);
}

Series gegenbauer_generating(const Rational& lambda, unsigned order) {
  return series_pow(Series::gegenbauer_base(order), -lambda);
}

}  // namespace trijac
