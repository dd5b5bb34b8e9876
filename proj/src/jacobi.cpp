#include "trijac/jacobi.hpp"

#include <algorithm>

namespace trijac {

namespace {

// (x - 1)/2 and (x + 1)/2
Poly half_x_minus_one() { return Poly::linear(Rational(-1, 2), Rational(1, 2)); }
Poly half_x_plus_one() { return Poly::linear(Rational(1, 2), Rational(1, 2)); }

unsigned to_index(const Rational& r) {
  const long v = to_long(r);
  if (v < 0) throw std::invalid_argument("negative index " + to_string(r));
  return static_cast<unsigned>(v);
}

bool is_neg_integer(const Rational& r) { return is_integer(r) && r <= -1; }

}  // namespace

Poly jacobi(unsigned n, const ParameterPoint& p) {
  const Rational top = n + p.alpha + p.beta + 1;
  const Poly base = half_x_minus_one();
  // Horner in u = (x-1)/2 over the coefficients of the terminating sum.
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    c[k] = pochhammer(top, k) * pochhammer(p.alpha + k + 1, n - k) / (factorial(k) * factorial(n - k));
  }
  Poly acc;
  for (unsigned k = n + 1; k-- > 0;) {
    acc *= base;
    acc += Poly::constant(c[k]);
  }
  return acc;
}

Rational jacobi_at(unsigned n, const Rational& alpha, const Rational& beta, const Rational& y) {
  const Rational top = n + alpha + beta + 1;
  const Rational u = (y - 1) / 2;
  Rational sum = 0;
  Rational u_power = 1;
  for (unsigned k = 0; k <= n; ++k) {
    sum += pochhammer(top, k) * pochhammer(alpha + k + 1, n - k) / (factorial(k) * factorial(n - k)) *
           u_power;
    u_power *= u;
  }
  return sum;
}

Poly gegenbauer(unsigned n, const Rational& lambda) {
  Poly result;
  for (unsigned k = 0; 2 * k <= n; ++k) {
    Rational c = pochhammer(lambda, n - k) / (factorial(k) * factorial(n - 2 * k));
    if (k % 2 == 1) c = -c;
    c *= power(Rational(2), static_cast<long>(n - 2 * k));
    result += Poly::monomial(c, n - 2 * k);
  }
  return result;
}

Poly gegenbauer_via_jacobi(unsigned n, const Rational& lambda) {
  const Rational denom = pochhammer(n + 2 * lambda, n);
  if (denom == 0) {
    throw ApparentSingularity("gegenbauer_via_jacobi: (n+2 lambda)_n vanishes at n=" +
                              std::to_string(n) + ", lambda=" + to_string(lambda));
  }
  const Rational shift = lambda - Rational(1, 2);
  const Rational scale = power(Rational(2), 2L * n) * pochhammer(lambda, n) / denom;
  return jacobi(n, shift, shift) * scale;
}

Poly even_odd_form(unsigned n, const Rational& alpha) {
  if (n == 0) return Poly::constant(1);
  const Rational half(1, 2);
  Poly sum;
  if (n % 2 == 0) {
    const unsigned m = n / 2;
    for (unsigned k = 0; k <= m; ++k) {
      Rational c = pochhammer(alpha + m + half, m - k) / (factorial(k) * factorial(2 * m - 2 * k));
      if (k % 2 == 1) c = -c;
      c *= power(Rational(2), 2L * (m - k));
      sum += Poly::monomial(c, 2 * m - 2 * k);
    }
    return sum * (power(Rational(2), -2L * m) * pochhammer(alpha + m + 1, m));
  }
  const unsigned m = (n + 1) / 2;
  for (unsigned k = 0; k + 1 <= m; ++k) {
    Rational c = pochhammer(alpha + m + half, m - 1 - k) / (factorial(k) * factorial(2 * m - 1 - 2 * k));
    if (k % 2 == 1) c = -c;
    c *= power(Rational(2), 2L * (m - k) - 1);
    sum += Poly::monomial(c, 2 * m - 1 - 2 * k);
  }
  return sum * (power(Rational(2), 1 - 2L * m) * pochhammer(alpha + m, m));
}

std::string to_string(DegenerateCase c) {
  switch (c) {
    case DegenerateCase::Zero: return "zero";
    case DegenerateCase::A: return "a";
    case DegenerateCase::B: return "b";
    case DegenerateCase::C: return "c";
    case DegenerateCase::D: return "d";
    case DegenerateCase::E: return "e";
    case DegenerateCase::F: return "f";
  }
  return "?";
}

bool degenerate_case_applies(DegenerateCase c, unsigned n, const ParameterPoint& p) {
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational s = a + b;
  const Rational nn = n;
  switch (c) {
    case DegenerateCase::Zero:
      return is_neg_integer(a) && is_neg_integer(b) && nn >= -a && nn >= -b && nn <= -s - 1;
    case DegenerateCase::A:
      return is_integer(s) && s <= -2 && nn + s + 1 <= 0 && 2 * nn + s >= 0;
    case DegenerateCase::B:
      return is_neg_integer(a) && nn + a >= 0;
    case DegenerateCase::C:
      return is_neg_integer(b) && nn + b >= 0;
    case DegenerateCase::D:
      return is_integer(a) && is_integer(b) && b + 2 <= a && a <= -1 && nn >= -a && nn >= -s / 2 &&
             nn <= -b - 1;
    case DegenerateCase::E:
      return is_integer(a) && is_integer(b) && a + 2 <= b && b <= -1 && nn >= -b && nn >= -s / 2 &&
             nn <= -a - 1;
    case DegenerateCase::F:
      return is_neg_integer(a) && is_neg_integer(b) && nn >= -s;
  }
  return false;
}

DegeneracyReport classify_degenerate(unsigned n, const ParameterPoint& p) {
  if (n == 0) throw std::invalid_argument("classify_degenerate requires n > 0");
  DegeneracyReport r;
  if (degenerate_case_applies(DegenerateCase::Zero, n, p)) {
    r.identically_zero = true;
    r.applicable_cases.insert(DegenerateCase::Zero);
    return r;
  }
  for (auto c : {DegenerateCase::A, DegenerateCase::B, DegenerateCase::C, DegenerateCase::D,
                 DegenerateCase::E, DegenerateCase::F}) {
    if (degenerate_case_applies(c, n, p)) r.applicable_cases.insert(c);
  }
  r.true_degree = static_cast<long>(n);
  if (r.applicable_cases.count(DegenerateCase::A)) {
    r.true_degree = to_long(-Rational(n) - p.alpha - p.beta - 1);
  }
  if (r.applicable_cases.count(DegenerateCase::B)) r.zero_mult_at_plus1 = to_index(-p.alpha);
  if (r.applicable_cases.count(DegenerateCase::C)) r.zero_mult_at_minus1 = to_index(-p.beta);
  return r;
}

Poly degenerate_transform(unsigned n, const ParameterPoint& p, DegenerateCase c) {
  if (c == DegenerateCase::Zero || !degenerate_case_applies(c, n, p)) {
    throw std::invalid_argument("degenerate_transform: conditions of case " + to_string(c) +
                                " fail at n=" + std::to_string(n) + ", alpha=" + to_string(p.alpha) +
                                ", beta=" + to_string(p.beta));
  }
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational nn = n;
  switch (c) {
    case DegenerateCase::A: {
      const unsigned len = to_index(2 * nn + a + b + 1);
      const Rational ratio = pochhammer(-nn - b, len) / pochhammer(-nn - a - b, len);
      return jacobi(to_index(-nn - a - b - 1), a, b) * ratio;
    }
    case DegenerateCase::B: {
      const unsigned ma = to_index(-a);
      const unsigned m = to_index(nn + a);
      const Rational factor = pochhammer(nn + a + b + 1, ma) * factorial(m) / factorial(n);
      return half_x_minus_one().pow(ma) * jacobi(m, -a, b) * factor;
    }
    case DegenerateCase::C: {
      const unsigned mb = to_index(-b);
      const unsigned m = to_index(nn + b);
      const Rational factor = pochhammer(nn + a + b + 1, mb) * factorial(m) / factorial(n);
      return half_x_plus_one().pow(mb) * jacobi(m, a, -b) * factor;
    }
    case DegenerateCase::D: {
      const Poly one_minus_x_half = Poly::linear(Rational(1, 2), Rational(-1, 2));
      return one_minus_x_half.pow(to_index(-a)) * jacobi(to_index(-nn - b - 1), -a, b);
    }
    case DegenerateCase::E: {
      const long sign_exp = to_long(a + 1);
      const Rational sign = (sign_exp % 2 == 0) ? 1 : -1;
      return half_x_plus_one().pow(to_index(-b)) * jacobi(to_index(-nn - a - 1), a, -b) * sign;
    }
    case DegenerateCase::F:
      return half_x_minus_one().pow(to_index(-a)) * half_x_plus_one().pow(to_index(-b)) *
             jacobi(to_index(nn + a + b), -a, -b);
    case DegenerateCase::Zero:
      break;
  }
  return {};
}

}  // namespace trijac
