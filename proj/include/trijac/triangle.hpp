#ifndef TRIJAC_TRIANGLE_HPP
#define TRIJAC_TRIANGLE_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "trijac/jacobi.hpp"
#include "trijac/poly.hpp"
#include "trijac/report.hpp"

namespace trijac {

/// Finite block [n0, n0+N-1]^2 of a doubly infinite lower triangular matrix
/// with polynomial entries. Entries above the diagonal are zero and not
/// stored. Because every matrix involved is lower triangular, products of
/// windows with the same index range are exact.
class TriWindow {
 public:
  using EntryFn = std::function<Poly(long m, long n)>;

  /// Fills entries (m, n), m >= n, from `entry`.
  TriWindow(long base_index, std::size_t size, const EntryFn& entry);

  static TriWindow identity(long base_index, std::size_t size);
  static TriWindow zero(long base_index, std::size_t size);

  long base_index() const { return base_; }
  std::size_t size() const { return size_; }
  long last_index() const { return base_ + static_cast<long>(size_) - 1; }
  bool contains(long i) const { return i >= base_ && i <= last_index(); }

  /// Diagonal entries are all the constant 1.
  bool unitriangular() const { return unitriangular_; }
  /// Entries depend only on m - n.
  bool is_toeplitz() const;

  /// Entry at absolute indices; zero above the diagonal. Throws
  /// std::out_of_range outside the window.
  const Poly& at(long m, long n) const;

  bool same_shape(const TriWindow& other) const {
    return base_ == other.base_ && size_ == other.size_;
  }

  friend bool operator==(const TriWindow& a, const TriWindow& b) {
    return a.same_shape(b) && a.entries_ == b.entries_;
  }

  TriWindow& operator+=(const TriWindow& other);
  TriWindow& operator*=(const Rational& c);
  friend TriWindow operator+(TriWindow a, const TriWindow& b) { return a += b; }
  friend TriWindow operator*(TriWindow a, const Rational& c) { return a *= c; }

 private:
  TriWindow(long base_index, std::size_t size);
  std::size_t slot(long m, long n) const;
  void refresh_flags();

  long base_;
  std::size_t size_;
  std::vector<Poly> entries_;
  bool unitriangular_ = false;
};

/// Exact product on the window. Throws std::invalid_argument when the
/// windows differ in base index or size.
TriWindow tri_mul(const TriWindow& a, const TriWindow& b);

/// Inverse of a unitriangular window by forward substitution. Throws
/// std::invalid_argument otherwise.
TriWindow tri_inverse(const TriWindow& a);

/// First entry (row-major, m ascending) where two windows differ.
std::optional<Counterexample> first_difference(const TriWindow& a, const TriWindow& b);

/// Case that passes iff the two windows agree entrywise.
CaseResult compare_windows(std::string id, std::vector<NamedRational> params, const TriWindow& lhs,
                           const TriWindow& rhs);

// --- The L/M pair ---------------------------------------------------------

/// P_{m-n}^(alpha+n, beta+n)(x)
Poly l_entry(const ParameterPoint& p, long m, long n);

/// Two-term Jacobi expression over n + alpha. Throws ApparentSingularity when
/// n + alpha = 0.
Poly m_entry_closed(const ParameterPoint& p, long m, long n);

/// Expansion in powers of (x-1)/2 with the n + alpha factor cancelled; valid
/// for every parameter value.
Poly m_entry_expanded(const ParameterPoint& p, long m, long n);

/// M_{m,n}: the closed form when n + alpha != 0, the expansion otherwise.
Poly m_entry(const ParameterPoint& p, long m, long n);

TriWindow build_L(const ParameterPoint& p, long n0, std::size_t size);
TriWindow build_M(const ParameterPoint& p, long n0, std::size_t size);

// --- Toeplitz families ----------------------------------------------------

/// P_{m,n} = P_{m-n}^(alpha,beta)(x)
TriWindow build_P(const ParameterPoint& p, long n0, std::size_t size);
/// Q_{m,n} = P_{m-n}^(alpha+n-m, beta+n-m)(x)
TriWindow build_Q(const ParameterPoint& p, long n0, std::size_t size);

// --- Koekoek pair (indices m >= n >= 0) -------------------------------------

/// A_{m,n} = (a+b+m+1)_n / n! P_{m-n}^(a+n, b+n)(y), as constant entries.
TriWindow build_koekoek_a(const ParameterPoint& p, const Rational& y, std::size_t size);
/// B_{m,n} = (a+b+2n+1)/(a+b+n+1) m!/(a+b+n+2)_m P_{m-n}^(-a-m-1, -b-m-1)(y).
/// Throws SingularParameters when a denominator vanishes in the window.
TriWindow build_koekoek_b(const ParameterPoint& p, const Rational& y, std::size_t size);

// --- Convolution identities -------------------------------------------------

enum class IdentityId {
  ShiftedConvolution, WeightedConvolution, LegendreConvolution, WeightedLegendreConvolution, TwoTermInverse, SymmetricInverse, TwoIndexInverse, LegendreSplitting, GegenbauerPochhammerInverse, PochhammerInverse, ReversedPochhammerInverse, GegenbauerLinearInverse, GegenbauerInverse, GegenbauerAddition
};

std::string to_string(IdentityId id);
IdentityId identity_from_string(const std::string& name);
/// Parameter names the identity expects, in order.
std::vector<std::string> identity_signature(IdentityId id);
std::vector<IdentityId> all_identities();

struct IdentitySpec {
  IdentityId id;
  std::vector<NamedRational> parameters;
  unsigned n_max = 10;
};

/// Evaluates both sides of the identity as exact polynomials for n <= n_max
/// (and, for TwoIndexInverse, every m >= n with n in [-n_max, n_max], m - n <= n_max).
/// Returns a single-case report carrying the smallest failing index.
/// Throws std::invalid_argument on a malformed IdentitySpec and SingularParameters
/// when a denominator of the identity vanishes for the given parameters.
VerificationReport run_convolution_suite(const IdentitySpec& spec);

}  // namespace trijac

#endif  // TRIJAC_TRIANGLE_HPP
