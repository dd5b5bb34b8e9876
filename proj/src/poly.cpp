#include "trijac/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace trijac {

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::x() { return Poly(std::vector<Rational>{0, 1}); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
  if (c == 0) return {};
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const Rational& c0, const Rational& c1) {
  return Poly(std::vector<Rational>{c0, c1});
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Poly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  Rational t;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      t = a.coeffs_[i] * b.coeffs_[j];
      out[i + j] += t;
    }
  }
  Poly p;
  p.coeffs_ = std::move(out);
  p.trim();
  return p;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

Poly& Poly::operator/=(const Rational& c) {
  if (c == 0) throw std::domain_error("polynomial division by zero");
  for (auto& v : coeffs_) v /= c;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& v : a.coeffs_) v = -v;
  return a;
}

Poly Poly::pow(unsigned e) const {
  Poly result = Poly::constant(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Poly Poly::reflect() const {
  Poly p = *this;
  for (std::size_t i = 1; i < p.coeffs_.size(); i += 2) p.coeffs_[i] = -p.coeffs_[i];
  return p;
}

Rational poly_eval(const Poly& p, const Rational& x0) {
  Rational acc = 0;
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x0;
    acc += *it;
  }
  return acc;
}

Poly poly_derivative(const Poly& p, unsigned order) {
  const auto c = p.coefficients();
  if (c.size() <= order) return {};
  std::vector<Rational> out(c.size() - order);
  for (std::size_t i = order; i < c.size(); ++i) {
    Rational f = 1;
    for (std::size_t j = 0; j < order; ++j) f *= static_cast<unsigned long>(i - j);
    out[i - order] = c[i] * f;
  }
  return Poly(std::move(out));
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& c : p.coefficients()) {
    if (!s.empty()) s += ' ';
    s += to_string(c);
  }
  return s;
}

}  // namespace trijac
