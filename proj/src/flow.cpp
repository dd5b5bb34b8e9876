#include "trijac/flow.hpp"

#include <stdexcept>

namespace trijac {

namespace {

std::vector<NamedRational> params_of(const ParameterPoint& p) {
  return {{"alpha", p.alpha}, {"beta", p.beta}};
}

TriWindow strict(long n0, std::size_t size, const std::function<Poly(long)>& by_offset) {
  return TriWindow(n0, size, [&](long m, long n) { return m == n ? Poly() : by_offset(m - n); });
}

}  // namespace

StrictLowerWindow::StrictLowerWindow(TriWindow w) : w_(std::move(w)) {
  for (long i = w_.base_index(); i <= w_.last_index(); ++i) {
    if (!w_.at(i, i).is_zero()) throw std::invalid_argument("diagonal of a strict window must vanish");
  }
}

StrictLowerWindow StrictLowerWindow::zero(long base_index, std::size_t size) {
  return StrictLowerWindow(TriWindow::zero(base_index, size));
}

TriWindow build_PH(const ParameterPoint& p, long n0, std::size_t size) {
  return tri_mul(tri_inverse(build_P({0, 0}, n0, size)), build_P(p, n0, size));
}

TriWindow build_QH(const ParameterPoint& p, long n0, std::size_t size) {
  return build_Q(p, n0, size);
}

Generators generator_matrices(long n0, std::size_t size) {
  auto inv = [](long d) -> Rational { return Rational(1) / d; };
  const auto d_u = [](long d) { return static_cast<unsigned>(d); };
  return {
      StrictLowerWindow(strict(n0, size, [&](long d) { return jacobi(d_u(d), 0, -1) * inv(d); })),
      StrictLowerWindow(strict(n0, size, [&](long d) { return jacobi(d_u(d), -1, 0) * inv(d); })),
      StrictLowerWindow(strict(n0, size, [&](long d) {
        return Poly::linear(Rational(-1, 2), Rational(-1, 2)).pow(d_u(d)) * -inv(d);
      })),
      StrictLowerWindow(strict(n0, size, [&](long d) {
        return Poly::linear(Rational(1, 2), Rational(-1, 2)).pow(d_u(d)) * -inv(d);
      })),
  };
}

TriWindow exp_nilpotent(const StrictLowerWindow& s) {
  const TriWindow& a = s.window();
  TriWindow sum = TriWindow::identity(a.base_index(), a.size());
  TriWindow term = sum;
  for (std::size_t j = 1; j < a.size(); ++j) {
    term = tri_mul(term, a) * (Rational(1) / static_cast<long>(j));
    sum += term;
  }
  return sum;
}

TriWindow p00_inverse_closed(long n0, std::size_t size) {
  return TriWindow(n0, size, [](long m, long n) {
    const long d = m - n;
    if (d == 0) return Poly::constant(1);
    if (d == 1) return Poly::monomial(-1, 1);
    return Poly({1, 0, -1}) * jacobi(static_cast<unsigned>(d - 2), 1, 1) / Rational(2 * (d - 1));
  });
}

TriWindow l00_inverse_closed(long n0, std::size_t size) {
  const ParameterPoint zero{0, 0};
  return TriWindow(n0, size, [&](long m, long n) {
    if (n == 0) return m_entry_expanded(zero, m, n);
    return jacobi(static_cast<unsigned>(m - n), -m, -m) * (Rational(m) / n);
  });
}

VerificationReport verify_conjugation(const ParameterPoint& p, long n0, std::size_t size) {
  VerificationReport rep{"groups", {}, 0};
  const auto params = params_of(p);
  const TriWindow l00 = build_L({0, 0}, n0, size);
  const TriWindow l = build_L(p, n0, size);
  const TriWindow ph = build_PH(p, n0, size);
  const TriWindow qh = build_QH(p, n0, size);
  const TriWindow l00_inv = tri_inverse(l00);
  rep.cases.push_back(compare_windows("conjugation/PH_L00", params, tri_mul(ph, l00), l));
  rep.cases.push_back(compare_windows("conjugation/L00_QH", params, tri_mul(l00, qh), l));
  rep.cases.push_back(
      compare_windows("conjugation/PH_by_QH", params, ph, tri_mul(tri_mul(l00, qh), l00_inv)));
  rep.cases.push_back(
      compare_windows("conjugation/L00_inverse", {}, l00_inverse_closed(n0, size), l00_inv));
  return rep;
}

VerificationReport run_group_suite(const ParameterPoint& p1, const ParameterPoint& p2, long n0,
                                   std::size_t size) {
  VerificationReport rep{"groups", {}, 0};
  std::vector<NamedRational> both = {{"alpha1", p1.alpha}, {"beta1", p1.beta},
                                     {"alpha2", p2.alpha}, {"beta2", p2.beta}};
  const ParameterPoint sum{p1.alpha + p2.alpha, p1.beta + p2.beta};

  const TriWindow p00 = build_P({0, 0}, n0, size);
  rep.cases.push_back(compare_windows("groups/P_law", both,
                                      tri_mul(build_P(p1, n0, size), build_P(p2, n0, size)),
                                      tri_mul(p00, build_P(sum, n0, size))));
  rep.cases.push_back(compare_windows("groups/Q_law", both,
                                      tri_mul(build_Q(p1, n0, size), build_Q(p2, n0, size)),
                                      build_Q(sum, n0, size)));
  rep.cases.push_back(compare_windows("groups/PH_law", both,
                                      tri_mul(build_PH(p1, n0, size), build_PH(p2, n0, size)),
                                      build_PH(sum, n0, size)));
  rep.cases.push_back(compare_windows("groups/PH_orderings", params_of(p1), build_PH(p1, n0, size),
                                      tri_mul(build_P(p1, n0, size), tri_inverse(p00))));

  const Generators g = generator_matrices(n0, size);
  rep.cases.push_back(compare_windows("groups/exp_Q", params_of(p1),
                                      exp_nilpotent(g.a_q * p1.alpha + g.b_q * p1.beta),
                                      build_QH(p1, n0, size)));
  rep.cases.push_back(compare_windows("groups/exp_P", params_of(p1),
                                      exp_nilpotent(g.a_p * p1.alpha + g.b_p * p1.beta),
                                      build_PH(p1, n0, size)));
  rep.cases.push_back(compare_windows("groups/commute_P", {}, tri_mul(g.a_p.window(), g.b_p.window()),
                                      tri_mul(g.b_p.window(), g.a_p.window())));
  rep.cases.push_back(compare_windows("groups/commute_Q", {}, tri_mul(g.a_q.window(), g.b_q.window()),
                                      tri_mul(g.b_q.window(), g.a_q.window())));

  const TriWindow p00_inv = tri_inverse(p00);
  rep.cases.push_back(compare_windows("groups/P00_inverse_gegenbauer", {},
                                      TriWindow(n0, size,
                                                [](long m, long n) {
                                                  return gegenbauer(static_cast<unsigned>(m - n),
                                                                    Rational(-1, 2));
                                                }),
                                      p00_inv));
  rep.cases.push_back(
      compare_windows("groups/P00_inverse_closed", {}, p00_inverse_closed(n0, size), p00_inv));

  rep.append(verify_conjugation(p1, n0, size));
  return rep;
}

}  // namespace trijac
