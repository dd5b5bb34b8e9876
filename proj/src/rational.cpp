#include "trijac/rational.hpp"

#include <cctype>
#include <regex>
#include <string>
#include <stdexcept>

namespace trijac {

namespace {

bool valid_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer_literal(num, true) || !valid_integer_literal(den, false)) {
    throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Integer p(n, 10);
  Integer q(std::string(den), 10);
  if (q == 0) {
    throw std::invalid_argument("zero denominator in rational literal: '" + std::string(text) + "'");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational parse_decimal(std::string_view text) {
  static const std::regex pattern(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?)");
  const std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, pattern) || (m[2].length() == 0 && m[3].length() == 0)) {
    throw std::invalid_argument("malformed decimal literal: '" + s + "'");
  }
  const std::string digits = m[2].str() + m[3].str();
  Rational r{Integer(digits, 10)};
  long exponent = -static_cast<long>(m[3].length());
  if (m[4].matched) {
    if (m[4].length() > 6) throw std::invalid_argument("decimal exponent out of range: '" + s + "'");
    exponent += std::stol(m[4].str());
  }
  r *= power(Rational(10), exponent);
  if (m[1] == "-") r = -r;
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::string to_decimal_string(const Rational& r, int digits) {
  if (digits < 1) digits = 1;
  if (r == 0) return "0";
  Integer num = abs(r.get_num());
  const Integer& den = r.get_den();

  // Find e with 10^e <= |r| < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  auto pow10 = [](long k) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return p;
  };
  auto geq_pow10 = [&](long k) {
    // |r| >= 10^k  <=>  num >= den * 10^k (k >= 0) or num * 10^-k >= den.
    return k >= 0 ? num >= den * pow10(k) : num * pow10(-k) >= den;
  };
  while (!geq_pow10(e)) --e;
  while (geq_pow10(e + 1)) ++e;

  // Scale so that the integer part carries `digits` significant digits.
  const long shift = digits - 1 - e;
  Integer scaled_num = num;
  Integer scaled_den = den;
  if (shift >= 0) {
    scaled_num *= pow10(shift);
  } else {
    scaled_den *= pow10(-shift);
  }
  Integer q;
  Integer rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
  if (2 * rem >= scaled_den) q += 1;  // round half up
  std::string ds = q.get_str(10);
  if (static_cast<int>(ds.size()) > digits) {  // rounding carried into a new digit
    ds.pop_back();
    ++e;
  }
  std::string out = r < 0 ? "-" : "";
  out += ds[0];
  if (ds.size() > 1) {
    out += '.';
    out += ds.substr(1);
  }
  out += 'e';
  out += e < 0 ? '-' : '+';
  const std::string es = std::to_string(e < 0 ? -e : e);
  if (es.size() < 2) out += '0';
  out += es;
  return out;
}

long to_long(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("not an integer: " + to_string(r));
  if (!r.get_num().fits_slong_p()) throw std::domain_error("integer out of range: " + to_string(r));
  return r.get_num().get_si();
}

Rational power(const Rational& a, long e) {
  if (e < 0) {
    if (a == 0) throw std::domain_error("zero raised to a negative power");
    return power(Rational(1) / a, -e);
  }
  Integer n;
  Integer d;
  mpz_pow_ui(n.get_mpz_t(), a.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), a.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

Rational pochhammer(const Rational& a, unsigned k) {
  Rational result = 1;
  Rational factor = a;
  for (unsigned j = 0; j < k; ++j) {
    result *= factor;
    if (result == 0) return result;
    factor += 1;
  }
  return result;
}

Rational factorial(unsigned k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

Rational binomial(const Rational& e, unsigned k) {
  Rational result = 1;
  for (unsigned j = 0; j < k; ++j) {
    result *= (e - j);
    result /= (j + 1);
  }
  return result;
}

}  // namespace trijac
