#ifndef TRIJAC_FLOW_HPP
#define TRIJAC_FLOW_HPP

#include <cstddef>

#include "trijac/triangle.hpp"

namespace trijac {

/// Lower triangular window whose diagonal vanishes; nilpotent on the window.
class StrictLowerWindow {
 public:
  /// Throws std::invalid_argument if some diagonal entry is nonzero.
  explicit StrictLowerWindow(TriWindow w);

  static StrictLowerWindow zero(long base_index, std::size_t size);

  const TriWindow& window() const { return w_; }

  friend StrictLowerWindow operator+(const StrictLowerWindow& a, const StrictLowerWindow& b) {
    return StrictLowerWindow(a.w_ + b.w_);
  }
  friend StrictLowerWindow operator*(const StrictLowerWindow& a, const Rational& c) {
    return StrictLowerWindow(a.w_ * c);
  }
  friend bool operator==(const StrictLowerWindow& a, const StrictLowerWindow& b) {
    return a.w_ == b.w_;
  }

 private:
  TriWindow w_;
};

struct Generators {
  StrictLowerWindow a_p, b_p, a_q, b_q;
};

/// (P^(0,0))^{-1} P^(alpha,beta)
TriWindow build_PH(const ParameterPoint& p, long n0, std::size_t size);
/// Q^(alpha,beta)
TriWindow build_QH(const ParameterPoint& p, long n0, std::size_t size);

/// Infinitesimal generators of the two groups, from their closed forms.
Generators generator_matrices(long n0, std::size_t size);

/// Terminating exponential sum over s^j / j!, j < N.
TriWindow exp_nilpotent(const StrictLowerWindow& s);

/// Offset closed form of (P^(0,0))^{-1}: 1, -x, then (1-x^2)/(2(d-1)) P_{d-2}^(1,1).
TriWindow p00_inverse_closed(long n0, std::size_t size);

/// (m/n) P_{m-n}^(-m,-m), with the expansion of M^(0,0) at n = 0.
TriWindow l00_inverse_closed(long n0, std::size_t size);

/// P_H L^(0,0) = L = L^(0,0) Q_H, the conjugation P_H = L^(0,0) Q_H (L^(0,0))^{-1},
/// and the closed form of (L^(0,0))^{-1}.
VerificationReport verify_conjugation(const ParameterPoint& p, long n0, std::size_t size);

/// Group laws for both families at (p1, p2), the exponential
/// representation, generator commutation, (P^(0,0))^{-1}, and conjugation.
VerificationReport run_group_suite(const ParameterPoint& p1, const ParameterPoint& p2, long n0,
                                   std::size_t size);

}  // namespace trijac

#endif  // TRIJAC_FLOW_HPP
