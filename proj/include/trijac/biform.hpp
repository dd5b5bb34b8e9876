#ifndef TRIJAC_BIFORM_HPP
#define TRIJAC_BIFORM_HPP

#include <cstddef>

#include "trijac/series.hpp"
#include "trijac/triangle.hpp"

namespace trijac {

/// (J A)_{m,n} = A_{-n,-m}. The window must be symmetric about 0; throws
/// std::invalid_argument otherwise.
TriWindow flip(const TriWindow& a);

/// Toeplitz window with entries 1, x((x^2-1)/4)^j, 2((x^2-1)/4)^j by offset.
TriWindow build_R(long n0, std::size_t size);
/// mu_x(m, n): 1 on the diagonal, ((-1-x)/2)^d + ((1-x)/2)^d below it.
TriWindow build_mu(long n0, std::size_t size);
/// nu_x(m, n) = ((P^(0,0))^{-1})_{m,n}, by offset.
TriWindow build_nu(long n0, std::size_t size);

/// Scalar forms of the same bilinear forms.
Poly mu_x(long m, long n);
Poly nu_x(long m, long n);

/// phi_n(k) = L_{n,k} for k <= n, zero otherwise.
Poly phi(const ParameterPoint& p, long n, long k);
/// psi_n(k) = M_{-k,-n} for k <= n, zero otherwise; evaluated from the
/// two-term formula over alpha - n, falling back to the expansion at alpha = n.
Poly psi(const ParameterPoint& p, long n, long k);

/// Sum_{n <= k} R_{n,0} w^n and its inverse, as truncated series.
Series r_generating(unsigned order);
Series mu_generating(unsigned order);

/// Every identity of the bilinear-form family on the symmetric window
/// [n0, -n0]: matrix forms, the scalar double sums, shift covariance,
/// the dual relation, and the Legendre-case support restrictions.
VerificationReport run_biform_suite(const ParameterPoint& p, long n0, std::size_t size);

}  // namespace trijac

#endif  // TRIJAC_BIFORM_HPP
