#ifndef TRIJAC_ASKEY_WILSON_HPP
#define TRIJAC_ASKEY_WILSON_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "trijac/jacobi.hpp"
#include "trijac/report.hpp"

namespace trijac {

/// (a; q)_k = prod_{j<k} (1 - a q^j)
Rational q_pochhammer(const Rational& a, const Rational& q, unsigned k);
/// Product of (a_i; q)_k over the list.
Rational q_pochhammer(const std::vector<Rational>& a, const Rational& q, unsigned k);

/// Terminating basic hypergeometric sum
///   sum_{j=0}^{terms} (num; q)_j / (den; q)_j z^j / (q; q)_j.
/// Throws SingularParameters if a denominator vanishes.
Rational qhyper(const std::vector<Rational>& num, const std::vector<Rational>& den,
                const Rational& q, const Rational& z, unsigned terms);

/// Parameters of one connection problem. The point z stands for e^{i theta},
/// so cos(theta) = (z + 1/z)/2. The b-family is (b1, b2, b3, a4).
struct QPoint {
  Rational q;
  std::array<Rational, 4> a;
  std::array<Rational, 3> b;
  Rational z;

  std::array<Rational, 4> b_family() const { return {b[0], b[1], b[2], a[3]}; }
  /// Throws SingularParameters unless 0 < q < 1, z != 0 and every
  /// denominator of the connection coefficients is nonzero for n <= n_max.
  void validate(unsigned n_max) const;
};

/// p_n(cos theta; a1..a4 | q) at the point z, exact. Throws
/// SingularParameters if a1 = 0 or z = 0.
Rational aw_poly(unsigned n, const std::array<Rational, 4>& a, const Rational& q, const Rational& z);

/// c_{n,k}(b1, b2, b3, a4; a1, a2, a3, a4 | q): p_n(b-family) in terms of p_k(a).
Rational conn_coeff_fwd(unsigned n, unsigned k, const QPoint& pt);
/// c_{n,k}(a1, a2, a3, a4; b1, b2, b3, a4 | q) from the reversed 5phi4, whose
/// last lower parameter is q^{last_offset - 2n}/(a1a2a3a4). Reversing the
/// forward sum gives last_offset = 2; other values are kept for comparison.
Rational conn_coeff_bwd(unsigned n, unsigned k, const QPoint& pt, long last_offset = 2);

/// Both connection expansions checked exactly at pt.z for n <= n_max, and
/// the forward and backward coefficient arrays checked to be mutually inverse.
VerificationReport verify_connection(unsigned n_max, const QPoint& pt);

/// q = r^D with D a positive integer, so q^e = r^(D e) is rational whenever
/// D e is an integer.
struct QPower {
  Rational r;
  unsigned d = 1;

  Rational q() const { return power(r, static_cast<long>(d)); }
  /// Throws std::invalid_argument when D e is not an integer.
  Rational pow(const Rational& e) const;
};

struct LimitParams {
  Rational b1, b2;
  std::array<Rational, 3> a;
  Rational z;
  Rational alpha, beta;
};

struct LimitPoint {
  Rational x, y, a4, b3;
};

/// a4 = q^(alpha+1)/b1, b3 = q^(beta+1)/b2 and the limit variables x, y.
/// Throws SingularParameters when a denominator vanishes.
LimitPoint limit_map(const LimitParams& lp, const QPower& q);

/// x and y depend on neither q nor (for y) z; exposed for the tests.
Rational limit_x(const LimitParams& lp);
Rational limit_y(const LimitParams& lp);

struct LimitSchedule {
  /// Common denominator of alpha and beta.
  unsigned d = 1;
  std::vector<unsigned> steps = {3, 4, 5, 6, 7, 8};

  /// r_t = 1 - 2^{-t}
  static Rational base(unsigned t);
};

struct LimitCriteria {
  Rational ratio = Rational(3, 4);
  Rational tolerance = Rational(1, 10000);
};

/// Absolute error of one normalized quantity along the schedule.
struct ErrorSequence {
  std::string quantity;
  std::vector<NamedIndex> indices;
  std::vector<Rational> errors;
  Status status = Status::Pass;
  /// Offending step when the sequence failed.
  std::size_t failing_step = 0;
};

struct ConvergenceReport {
  std::vector<unsigned> steps;
  std::vector<ErrorSequence> sequences;

  bool passed() const;
  /// One case per sequence; notes carry the error table as decimals.
  VerificationReport to_report(const std::string& prefix,
                               const std::vector<NamedRational>& params) const;
};

/// Applies the acceptance rule to an error sequence: either all zero, or the
/// step ratios over the second half are at most `ratio` and the final error
/// is at most `tolerance`.
void judge(ErrorSequence& seq, const LimitCriteria& criteria);

/// Errors of the three normalized quantities against their q -> 1 limits:
/// the b-family polynomial over (q;q)_n, the a-family polynomial with
/// a4 = q^(alpha+1)/b1, and the normalized 5phi4 block. With `corrupt` set,
/// every target is shifted by 1.
ConvergenceReport check_q_limits(const LimitParams& lp, const LimitSchedule& schedule,
                                 unsigned n_max, const LimitCriteria& criteria,
                                 bool corrupt = false);

/// The two q = 1 connection formulas as polynomial identities in x at the
/// point y, the two scalar delta identities at y, and the mutually inverse
/// pair built from them. Throws SingularParameters on a singular sample.
VerificationReport verify_limit_identities(const Rational& alpha, const Rational& beta,
                                           const Rational& y, unsigned n_max);

}  // namespace trijac

#endif  // TRIJAC_ASKEY_WILSON_HPP
