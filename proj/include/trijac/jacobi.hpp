#ifndef TRIJAC_JACOBI_HPP
#define TRIJAC_JACOBI_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "trijac/poly.hpp"
#include "trijac/rational.hpp"

namespace trijac {

struct ParameterPoint {
  Rational alpha;
  Rational beta;

  friend bool operator==(const ParameterPoint&, const ParameterPoint&) = default;
};

/// Thrown when a formula hits a vanishing denominator that the underlying
/// quantity does not actually have (the value extends by continuity).
class ApparentSingularity : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a parameter sample makes a genuine denominator vanish.
class SingularParameters : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Jacobi polynomial P_n^(alpha,beta)(x) from the terminating sum
///   sum_k (n+a+b+1)_k (a+k+1)_{n-k} / (k! (n-k)!) ((x-1)/2)^k,
/// which is polynomial and finite for every parameter value.
Poly jacobi(unsigned n, const ParameterPoint& p);
inline Poly jacobi(unsigned n, const Rational& alpha, const Rational& beta) {
  return jacobi(n, ParameterPoint{alpha, beta});
}

/// P_n^(alpha,beta)(y) at a rational point.
Rational jacobi_at(unsigned n, const Rational& alpha, const Rational& beta, const Rational& y);

/// Legendre P_n = P_n^(0,0).
inline Poly legendre(unsigned n) { return jacobi(n, 0, 0); }

/// Gegenbauer C_n^(lambda)(x) from the explicit sum in powers of 2x.
/// C_n^(0) = delta_{n,0}; no Chebyshev rescaling.
Poly gegenbauer(unsigned n, const Rational& lambda);

/// 2^{2n} (lambda)_n / (n+2 lambda)_n P_n^(lambda-1/2, lambda-1/2).
/// Throws ApparentSingularity when (n+2 lambda)_n = 0.
Poly gegenbauer_via_jacobi(unsigned n, const Rational& lambda);

/// P_n^(alpha,alpha) through the parity-split sums (n = 2m or n = 2m-1).
Poly even_odd_form(unsigned n, const Rational& alpha);

enum class DegenerateCase { Zero, A, B, C, D, E, F };

std::string to_string(DegenerateCase c);

struct DegeneracyReport {
  bool identically_zero = false;
  /// nullopt: the zero polynomial.
  std::optional<long> true_degree;
  unsigned zero_mult_at_plus1 = 0;
  unsigned zero_mult_at_minus1 = 0;
  std::set<DegenerateCase> applicable_cases;
};

/// Reads off degeneracies of P_n^(alpha,beta), n > 0, from integrality
/// conditions on alpha, beta and alpha+beta.
DegeneracyReport classify_degenerate(unsigned n, const ParameterPoint& p);

/// True when the parameter conditions of `c` hold at (n, p).
bool degenerate_case_applies(DegenerateCase c, unsigned n, const ParameterPoint& p);

/// Right-hand side of the transformation formula for case `c`, built from
/// lower-degree Jacobi polynomials and powers of (x -+ 1)/2. Throws
/// std::invalid_argument if the case conditions fail at (n, p).
Poly degenerate_transform(unsigned n, const ParameterPoint& p, DegenerateCase c);

}  // namespace trijac

#endif  // TRIJAC_JACOBI_HPP
