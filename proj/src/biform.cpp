#include "trijac/biform.hpp"

#include <stdexcept>

#include "trijac/flow.hpp"

namespace trijac {

namespace {

const Poly& quarter_x2m1() {
  static const Poly q = Poly({Rational(-1, 4), 0, Rational(1, 4)});
  return q;
}

bool symmetric(long n0, std::size_t size) { return n0 + static_cast<long>(size) - 1 == -n0; }

Poly delta(long m, long n) { return m == n ? Poly::constant(1) : Poly(); }

}  // namespace

TriWindow flip(const TriWindow& a) {
  if (!symmetric(a.base_index(), a.size())) {
    throw std::invalid_argument("flip needs a window symmetric about 0");
  }
  return TriWindow(a.base_index(), a.size(), [&](long m, long n) { return a.at(-n, -m); });
}

TriWindow build_R(long n0, std::size_t size) {
  return TriWindow(n0, size, [](long m, long n) {
    const long d = m - n;
    if (d == 0) return Poly::constant(1);
    if (d % 2 == 0) return quarter_x2m1().pow(static_cast<unsigned>(d / 2)) * Rational(2);
    return Poly::x() * quarter_x2m1().pow(static_cast<unsigned>((d - 1) / 2));
  });
}

Poly mu_x(long m, long n) {
  if (m < n) return Poly();
  if (m == n) return Poly::constant(1);
  const auto d = static_cast<unsigned>(m - n);
  return Poly::linear(Rational(-1, 2), Rational(-1, 2)).pow(d) +
         Poly::linear(Rational(1, 2), Rational(-1, 2)).pow(d);
}

Poly nu_x(long m, long n) {
  if (m < n) return Poly();
  const long d = m - n;
  if (d == 0) return Poly::constant(1);
  if (d == 1) return Poly::monomial(-1, 1);
  return Poly({1, 0, -1}) * jacobi(static_cast<unsigned>(d - 2), 1, 1) / Rational(2 * (d - 1));
}

TriWindow build_mu(long n0, std::size_t size) { return TriWindow(n0, size, mu_x); }
TriWindow build_nu(long n0, std::size_t size) { return TriWindow(n0, size, nu_x); }

Poly phi(const ParameterPoint& p, long n, long k) {
  if (k > n) return Poly();
  return l_entry(p, n, k);
}

Poly psi(const ParameterPoint& p, long n, long k) {
  if (k > n) return Poly();
  const Rational den = p.alpha - n;
  if (den == 0) return m_entry(p, -k, -n);
  const auto d = static_cast<unsigned>(n - k);
  return jacobi(d, -p.alpha + k, -p.beta + k) * ((p.beta - k) / den) +
         jacobi(d, -p.alpha + k, -p.beta + k - 1) * ((p.alpha - p.beta) / den);
}

Series r_generating(unsigned order) {
  const TriWindow r = build_R(0, order + 1);
  std::vector<Poly> c(order + 1);
  for (unsigned n = 0; n <= order; ++n) c[n] = r.at(n, 0);
  return Series(order, std::move(c));
}

Series mu_generating(unsigned order) {
  std::vector<Poly> c(order + 1);
  for (unsigned n = 0; n <= order; ++n) c[n] = mu_x(n, 0);
  return Series(order, std::move(c));
}

VerificationReport run_biform_suite(const ParameterPoint& p, long n0, std::size_t size) {
  if (!symmetric(n0, size)) throw std::invalid_argument("biform suite needs a symmetric window");
  VerificationReport rep{"biform", {}, 0};
  const std::vector<NamedRational> params = {{"alpha", p.alpha}, {"beta", p.beta}};
  const ParameterPoint neg{-p.alpha, -p.beta};
  const long lo = n0, hi = -n0;

  const TriWindow l = build_L(p, n0, size);
  const TriWindow jl = flip(build_L(neg, n0, size));
  const TriWindow r = build_R(n0, size);
  const TriWindow s = build_mu(n0, size);
  const TriWindow t = build_nu(n0, size);
  const TriWindow id = TriWindow::identity(n0, size);
  const TriWindow p00 = build_P({0, 0}, n0, size);

  auto matrix = [&](const char* id_str, const TriWindow& lhs, const TriWindow& rhs,
                    bool with_params = true) {
    rep.cases.push_back(compare_windows(id_str, with_params ? params : std::vector<NamedRational>{},
                                        lhs, rhs));
  };
  matrix("biform/RS", tri_mul(r, s), id, false);
  matrix("biform/SR", tri_mul(s, r), id, false);
  matrix("biform/T_inverse", tri_mul(p00, t), id, false);
  matrix("biform/flipL_L_is_R", tri_mul(jl, l), r);
  matrix("biform/L_S_flipL", tri_mul(tri_mul(l, s), jl), id);
  matrix("biform/L_flipL_is_P", tri_mul(l, jl), p00);
  matrix("biform/flipL_T_L", tri_mul(tri_mul(jl, t), l), id);
  matrix("biform/M_from_S", build_M(p, n0, size), tri_mul(s, jl));

  {
    CaseBuilder b("biform/psi_is_M", params);
    for (long n = lo; n <= hi; ++n) {
      for (long k = lo; k <= n; ++k) b.expect_equal(psi(p, n, k), m_entry(p, -k, -n), {{"n", n}, {"k", k}});
    }
    rep.cases.push_back(std::move(b).finish());
  }
  {
    CaseBuilder b("biform/biorthogonality", params);
    CaseBuilder dual("biform/dual", params);
    for (long m = lo; m <= hi; ++m) {
      for (long n = lo; n <= hi; ++n) {
        Poly sum, dsum;
        for (long k = n; k <= m; ++k) sum += phi(p, m, k) * psi(p, -n, -k);
        for (long k = n; k <= m; ++k) dsum += psi(p, -k, -m) * phi(p, k, n);
        b.expect_equal(sum, delta(m, n), {{"m", m}, {"n", n}});
        dual.expect_equal(dsum, delta(m, n), {{"m", m}, {"n", n}});
      }
    }
    rep.cases.push_back(std::move(b).finish());
    rep.cases.push_back(std::move(dual).finish());
  }
  {
    // Double sums over the stated range; a margin of two indices on each
    // side checks that the dropped summands vanish.
    const long margin = 2;
    CaseBuilder b_mu("biform/mu_biorthogonality", params);
    CaseBuilder b_nu("biform/nu_biorthogonality", params);
    CaseBuilder support("biform/double_sum_support", params);
    for (long m = lo; m <= hi; ++m) {
      for (long n = lo; n <= m; ++n) {
        Poly s_mu, s_nu;
        for (long k = n - margin; k <= m + margin; ++k) {
          for (long ell = n - margin; ell <= m + margin; ++ell) {
            const Poly t_mu = phi(p, m, k) * phi(neg, -n, -ell) * mu_x(k, ell);
            const Poly t_nu = phi(neg, -k, -m) * phi(p, ell, n) * nu_x(k, ell);
            if (n <= ell && ell <= k && k <= m) {
              s_mu += t_mu;
              s_nu += t_nu;
            } else {
              support.expect_equal(t_mu, Poly(), {{"m", m}, {"n", n}, {"k", k}, {"l", ell}});
              support.expect_equal(t_nu, Poly(), {{"m", m}, {"n", n}, {"k", k}, {"l", ell}});
            }
          }
        }
        b_mu.expect_equal(s_mu, delta(m, n), {{"m", m}, {"n", n}});
        b_nu.expect_equal(s_nu, delta(m, n), {{"m", m}, {"n", n}});
      }
    }
    rep.cases.push_back(std::move(b_mu).finish());
    rep.cases.push_back(std::move(b_nu).finish());
    rep.cases.push_back(std::move(support).finish());
  }
  {
    CaseBuilder b("biform/psi_via_mu", params);
    for (long k = lo; k <= hi; ++k) {
      for (long n = lo; n <= k; ++n) {
        Poly sum;
        for (long ell = n; ell <= k; ++ell) sum += mu_x(k, ell) * phi(neg, -n, -ell);
        b.expect_equal(psi(p, -n, -k), sum, {{"n", n}, {"k", k}});
      }
    }
    rep.cases.push_back(std::move(b).finish());
  }
  {
    CaseBuilder b("biform/shift", params);
    for (long j = -3; j <= 3; ++j) {
      const ParameterPoint shifted{p.alpha + j, p.beta + j};
      for (long n = lo; n <= hi; ++n) {
        for (long k = lo; k <= n; ++k) {
          b.expect_equal(phi(shifted, n, k), phi(p, n + j, k + j), {{"j", j}, {"n", n}, {"k", k}});
          b.expect_equal(psi(shifted, n, k), psi(p, n - j, k - j), {{"j", j}, {"n", n}, {"k", k}});
        }
      }
    }
    rep.cases.push_back(std::move(b).finish());
  }
  {
    // Legendre case: the k/n weight, with the expansion of M^(0,0) at n = 0.
    const ParameterPoint zero{0, 0};
    auto weighted = [&](long n, long k) -> Poly {
      if (n == 0) return m_entry_expanded(zero, k, 0);
      return phi(zero, -n, -k) * (Rational(k) / n);
    };
    CaseBuilder b("biform/legendre_biorthogonality", {});
    CaseBuilder support("biform/legendre_support", {});
    for (long m = lo; m <= hi; ++m) {
      for (long n = lo; n <= m; ++n) {
        Poly sum;
        for (long k = n; k <= m; ++k) sum += phi(zero, m, k) * weighted(n, k);
        b.expect_equal(sum, delta(m, n), {{"m", m}, {"n", n}});
        // n < 0 <= -n < m: only k in [n, -n] contribute
        if (n < 0 && -n < m) {
          for (long k = -n + 1; k <= m; ++k) {
            support.expect_equal(phi(zero, m, k) * weighted(n, k), Poly(), {{"m", m}, {"n", n}, {"k", k}});
          }
        }
        // n < -m <= 0 <= m: only k in [-m, m] contribute
        if (n < -m && m >= 0) {
          for (long k = n; k < -m; ++k) {
            support.expect_equal(phi(zero, m, k) * weighted(n, k), Poly(), {{"m", m}, {"n", n}, {"k", k}});
          }
        }
      }
    }
    auto sc = std::move(support).finish();
    sc.notes.push_back("first restriction checked for n < 0; at n = 0 the expanded weight is nonzero");
    rep.cases.push_back(std::move(b).finish());
    rep.cases.push_back(std::move(sc));
  }
  {
    const auto order = static_cast<unsigned>(size - 1);
    const Series base = Series::constant(order, 1);
    const Series num =
        base - Series(order, {Poly(), Poly(), quarter_x2m1()});
    const Series f1 = base + Series(order, {Poly(), Poly::linear(Rational(1, 2), Rational(1, 2))});
    const Series f2 = base + Series(order, {Poly(), Poly::linear(Rational(-1, 2), Rational(1, 2))});
    const Series mu_gf = num * series_recip(f1 * f2);
    const Series r_gf = f1 * f2 * series_recip(num);
    CaseBuilder b("biform/generating", {});
    const Series mu_c = mu_generating(order), r_c = r_generating(order);
    for (unsigned n = 0; n <= order; ++n) {
      b.expect_equal(mu_c[n], mu_gf[n], {{"n", static_cast<long>(n)}});
      b.expect_equal(r_c[n], r_gf[n], {{"n", static_cast<long>(n)}});
    }
    rep.cases.push_back(std::move(b).finish());
  }
  return rep;
}

}  // namespace trijac
