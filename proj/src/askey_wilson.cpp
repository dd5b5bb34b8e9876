#include "trijac/askey_wilson.hpp"

#include <algorithm>
#include <stdexcept>

#include "trijac/triangle.hpp"

namespace trijac {

namespace {

Rational qpow(const Rational& q, long e) { return power(q, e); }

void require_nonzero(const Rational& v, const char* what) {
  if (v == 0) throw SingularParameters(std::string("vanishing ") + what);
}

Rational product(const std::array<Rational, 4>& a) { return a[0] * a[1] * a[2] * a[3]; }

std::vector<NamedRational> qpoint_params(const QPoint& pt) {
  return {{"q", pt.q},       {"a1", pt.a[0]}, {"a2", pt.a[1]}, {"a3", pt.a[2]}, {"a4", pt.a[3]},
          {"b1", pt.b[0]},   {"b2", pt.b[1]}, {"b3", pt.b[2]}, {"z", pt.z}};
}

}  // namespace

Rational q_pochhammer(const Rational& a, const Rational& q, unsigned k) {
  Rational result = 1;
  Rational term = a;
  for (unsigned j = 0; j < k; ++j) {
    result *= 1 - term;
    term *= q;
  }
  return result;
}

Rational q_pochhammer(const std::vector<Rational>& a, const Rational& q, unsigned k) {
  Rational result = 1;
  for (const auto& v : a) result *= q_pochhammer(v, q, k);
  return result;
}

Rational qhyper(const std::vector<Rational>& num, const std::vector<Rational>& den,
                const Rational& q, const Rational& z, unsigned terms) {
  Rational sum = 0;
  Rational term = 1;
  for (unsigned j = 0;; ++j) {
    sum += term;
    if (j == terms) break;
    Rational factor = z / (1 - qpow(q, j + 1));
    for (const auto& a : num) factor *= 1 - a * qpow(q, j);
    for (const auto& b : den) {
      const Rational d = 1 - b * qpow(q, j);
      require_nonzero(d, "denominator factor in a basic hypergeometric sum");
      factor /= d;
    }
    term *= factor;
  }
  return sum;
}

void QPoint::validate(unsigned n_max) const {
  if (q <= 0 || q >= 1) throw SingularParameters("q must lie strictly between 0 and 1");
  require_nonzero(z, "z");
  for (const auto& v : a) require_nonzero(v, "a parameter");
  for (const auto& v : b) require_nonzero(v, "b parameter");
  const Rational big_a = product(a);
  const Rational big_b = product(b_family());
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      require_nonzero(q_pochhammer(big_a * qpow(q, long(k) - 1), q, k), "(a1a2a3a4 q^{k-1}; q)_k");
      require_nonzero(q_pochhammer(big_b * qpow(q, long(k) - 1), q, k), "(b1b2b3a4 q^{k-1}; q)_k");
      require_nonzero(q_pochhammer(big_a * qpow(q, 2 * long(k)), q, n - k), "(a1a2a3a4 q^{2k}; q)_j");
      require_nonzero(q_pochhammer(big_b * qpow(q, 2 * long(k)), q, n - k), "(b1b2b3a4 q^{2k}; q)_j");
      for (const auto& bi : b) {
        require_nonzero(q_pochhammer(qpow(q, 1 - long(n)) / (bi * a[3]), q, n - k),
                        "(q^{1-n}/(b_i a4); q)_j");
      }
      require_nonzero(q_pochhammer(qpow(q, 2 - 2 * long(n)) / big_a, q, n - k),
                      "(q^{2-2n}/(a1a2a3a4); q)_j");
      for (const auto& ai : a) {
        require_nonzero(q_pochhammer(qpow(q, 1 - long(n)) / (ai * a[3]), q, n - k),
                        "(q^{1-n}/(a_i a4); q)_j");
      }
    }
  }
}

Rational aw_poly(unsigned n, const std::array<Rational, 4>& a, const Rational& q, const Rational& z) {
  require_nonzero(a[0], "a1");
  require_nonzero(z, "z");
  const Rational big_a = product(a);
  const Rational q_minus_n = qpow(q, -long(n));
  Rational sum = 0;
  for (unsigned k = 0; k <= n; ++k) {
    Rational term = q_pochhammer({q_minus_n, big_a * qpow(q, long(n) - 1), a[0] * z, a[0] / z}, q, k);
    term *= qpow(q, k) / q_pochhammer(q, q, k);
    for (std::size_t i = 1; i < 4; ++i) term *= q_pochhammer(a[0] * a[i] * qpow(q, k), q, n - k);
    sum += term;
  }
  return sum / power(a[0], n);
}

Rational conn_coeff_fwd(unsigned n, unsigned k, const QPoint& pt) {
  if (k > n) return 0;
  const Rational& q = pt.q;
  const Rational& a4 = pt.a[3];
  require_nonzero(a4, "a4");
  const Rational big_a = product(pt.a);
  const Rational big_b = product(pt.b_family());
  const unsigned d = n - k;

  const Rational den = q_pochhammer(big_a * qpow(q, long(k) - 1), q, k);
  require_nonzero(den, "(a1a2a3a4 q^{k-1}; q)_k");
  const Rational pre = qpow(q, long(k) * (long(k) - long(n))) * q_pochhammer(q, q, n) /
                       (power(a4, d) * q_pochhammer(q, q, d) * q_pochhammer(q, q, k)) *
                       q_pochhammer(big_b * qpow(q, long(n) - 1), q, k) / den;

  // The outer (b_i a4 q^k; q)_{n-k} absorb the 5phi4 denominators.
  Rational sum = 0;
  for (unsigned j = 0; j <= d; ++j) {
    Rational term = q_pochhammer({qpow(q, long(k) - long(n)), big_b * qpow(q, long(n + k) - 1),
                                  pt.a[0] * a4 * qpow(q, k), pt.a[1] * a4 * qpow(q, k),
                                  pt.a[2] * a4 * qpow(q, k)},
                                 q, j);
    const Rational tail = q_pochhammer(big_a * qpow(q, 2 * long(k)), q, j) * q_pochhammer(q, q, j);
    require_nonzero(tail, "(a1a2a3a4 q^{2k}; q)_j");
    term *= qpow(q, j) / tail;
    for (const auto& bi : pt.b) term *= q_pochhammer(bi * a4 * qpow(q, long(k + j)), q, d - j);
    sum += term;
  }
  return pre * sum;
}

Rational conn_coeff_bwd(unsigned n, unsigned k, const QPoint& pt, long last_offset) {
  if (k > n) return 0;
  const Rational& q = pt.q;
  const Rational& a4 = pt.a[3];
  require_nonzero(a4, "a4");
  const Rational big_a = product(pt.a);
  const Rational big_b = product(pt.b_family());
  const unsigned d = n - k;
  const long half = (long(d) * (long(n + k) - 1)) / 2;

  const Rational den = q_pochhammer(big_b * qpow(q, long(k) - 1), q, k) *
                       q_pochhammer(big_b * qpow(q, 2 * long(k)), q, d);
  require_nonzero(den, "(b1b2b3a4 q^{k-1}; q)_k (b1b2b3a4 q^{2k}; q)_{n-k}");
  Rational pre = (d % 2 == 0 ? 1 : -1) * qpow(q, -half) * q_pochhammer(q, q, n) /
                 (power(a4, d) * q_pochhammer(q, q, d) * q_pochhammer(q, q, k)) *
                 q_pochhammer(big_a * qpow(q, long(n) - 1), q, n) / den;
  for (const auto& bi : pt.b) pre *= q_pochhammer(bi * a4 * qpow(q, k), q, d);

  const Rational q1n = qpow(q, 1 - long(n));
  std::vector<Rational> num = {qpow(q, long(k) - long(n)), qpow(q, 1 - long(k + n)) / big_b};
  for (std::size_t i = 0; i < 3; ++i) num.push_back(q1n / (pt.a[i] * a4));
  std::vector<Rational> dens;
  for (const auto& bi : pt.b) dens.push_back(q1n / (bi * a4));
  dens.push_back(qpow(q, last_offset - 2 * long(n)) / big_a);
  return pre * qhyper(num, dens, q, q, d);
}

VerificationReport verify_connection(unsigned n_max, const QPoint& pt) {
  pt.validate(n_max);
  VerificationReport rep{"aw_connection", {}, 0};
  const auto params = qpoint_params(pt);
  const auto b_fam = pt.b_family();

  std::vector<Rational> pa(n_max + 1), pb(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    pa[n] = aw_poly(n, pt.a, pt.q, pt.z);
    pb[n] = aw_poly(n, b_fam, pt.q, pt.z);
  }
  std::vector<std::vector<Rational>> fwd(n_max + 1, std::vector<Rational>(n_max + 1));
  auto bwd = fwd;
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      fwd[n][k] = conn_coeff_fwd(n, k, pt);
      bwd[n][k] = conn_coeff_bwd(n, k, pt);
    }
  }

  CaseBuilder c_fwd("aw_connection/forward", params);
  CaseBuilder c_bwd("aw_connection/backward", params);
  for (unsigned n = 0; n <= n_max; ++n) {
    Rational s_fwd = 0, s_bwd = 0;
    for (unsigned k = 0; k <= n; ++k) {
      s_fwd += fwd[n][k] * pa[k];
      s_bwd += bwd[n][k] * pb[k];
    }
    c_fwd.expect_equal(pb[n], s_fwd, {{"n", long(n)}});
    c_bwd.expect_equal(pa[n], s_bwd, {{"n", long(n)}});
  }
  rep.cases.push_back(std::move(c_fwd).finish());
  rep.cases.push_back(std::move(c_bwd).finish());

  CaseBuilder inv("aw_connection/inverse", params);
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      Rational fb = 0, bf = 0;
      for (unsigned j = k; j <= n; ++j) {
        fb += fwd[n][j] * bwd[j][k];
        bf += bwd[n][j] * fwd[j][k];
      }
      const Rational delta = n == k ? 1 : 0;
      inv.expect_equal(fb, delta, {{"n", long(n)}, {"k", long(k)}});
      inv.expect_equal(bf, delta, {{"n", long(n)}, {"k", long(k)}});
    }
  }
  rep.cases.push_back(std::move(inv).finish());

  const QPoint swapped{pt.q, b_fam, {pt.a[0], pt.a[1], pt.a[2]}, pt.z};
  CaseBuilder rev("aw_connection/reversed_sum", params);
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      rev.expect_equal(bwd[n][k], conn_coeff_fwd(n, k, swapped), {{"n", long(n)}, {"k", long(k)}});
    }
  }
  rep.cases.push_back(std::move(rev).finish());

  CaseBuilder perm("aw_connection/symmetry", params);
  std::array<std::size_t, 4> idx = {0, 1, 2, 3};
  long perm_index = 0;
  do {
    const std::array<Rational, 4> permuted = {pt.a[idx[0]], pt.a[idx[1]], pt.a[idx[2]], pt.a[idx[3]]};
    for (unsigned n = 0; n <= n_max; ++n) {
      perm.expect_equal(aw_poly(n, permuted, pt.q, pt.z), pa[n], {{"perm", perm_index}, {"n", long(n)}});
    }
    ++perm_index;
  } while (std::next_permutation(idx.begin(), idx.end()));
  rep.cases.push_back(std::move(perm).finish());
  return rep;
}

Rational QPower::pow(const Rational& e) const {
  const Rational exponent = e * d;
  if (!is_integer(exponent)) throw std::invalid_argument("q power is not rational on this schedule");
  return power(r, to_long(exponent));
}

Rational limit_x(const LimitParams& lp) {
  const Rational c = (lp.z + 1 / lp.z) / 2;
  const Rational den = (1 - lp.b1 * lp.b2) * (lp.b2 - lp.b1);
  require_nonzero(den, "(1 - b1 b2)(b2 - b1)");
  return 1 - 2 * lp.b2 * (1 - 2 * lp.b1 * c + lp.b1 * lp.b1) / den;
}

Rational limit_y(const LimitParams& lp) {
  const auto& a = lp.a;
  const Rational den = (lp.b1 - lp.b2) * (lp.b1 * lp.b2 - 1) * (lp.b1 - a[0] * a[1] * a[2]);
  require_nonzero(den, "(b1 - b2)(b1 b2 - 1)(b1 - a1 a2 a3)");
  return 1 - 2 * lp.b2 * (lp.b1 - a[0]) * (lp.b1 - a[1]) * (lp.b1 - a[2]) / den;
}

LimitPoint limit_map(const LimitParams& lp, const QPower& q) {
  require_nonzero(lp.z, "z");
  require_nonzero(lp.b1, "b1");
  require_nonzero(lp.b2, "b2");
  return {limit_x(lp), limit_y(lp), q.pow(lp.alpha + 1) / lp.b1, q.pow(lp.beta + 1) / lp.b2};
}

Rational LimitSchedule::base(unsigned t) { return 1 - power(Rational(1, 2), t); }

bool ConvergenceReport::passed() const {
  return std::all_of(sequences.begin(), sequences.end(),
                     [](const ErrorSequence& s) { return s.status == Status::Pass; });
}

VerificationReport ConvergenceReport::to_report(const std::string& prefix,
                                                const std::vector<NamedRational>& params) const {
  VerificationReport rep{"aw_limit", {}, 0};
  for (const auto& seq : sequences) {
    std::string id = prefix + "/" + seq.quantity + "[";
    for (std::size_t i = 0; i < seq.indices.size(); ++i) {
      id += (i ? "," : "") + seq.indices[i].first + "=" + std::to_string(seq.indices[i].second);
    }
    id += "]";
    CaseResult c{id, params, seq.status, std::nullopt, {}};
    for (std::size_t i = 0; i < seq.errors.size(); ++i) {
      c.notes.push_back("t=" + std::to_string(steps[i]) + " error=" + to_decimal_string(seq.errors[i]));
    }
    if (seq.status == Status::Fail) {
      auto indices = seq.indices;
      indices.emplace_back("t", static_cast<long>(steps[seq.failing_step]));
      c.counterexample = Counterexample{indices, Poly::constant(seq.errors[seq.failing_step])};
    }
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

void judge(ErrorSequence& seq, const LimitCriteria& criteria) {
  seq.status = Status::Pass;
  const auto& e = seq.errors;
  if (e.empty() || std::all_of(e.begin(), e.end(), [](const Rational& v) { return v == 0; })) return;
  for (std::size_t i = std::max<std::size_t>(e.size() / 2, 1); i < e.size(); ++i) {
    if (e[i] > criteria.ratio * e[i - 1]) {
      seq.status = Status::Fail;
      seq.failing_step = i;
      return;
    }
  }
  if (e.back() > criteria.tolerance) {
    seq.status = Status::Fail;
    seq.failing_step = e.size() - 1;
  }
}

ConvergenceReport check_q_limits(const LimitParams& lp, const LimitSchedule& schedule,
                                 unsigned n_max, const LimitCriteria& criteria, bool corrupt) {
  if (!is_integer(lp.alpha * schedule.d) || !is_integer(lp.beta * schedule.d)) {
    throw std::invalid_argument("alpha and beta must have denominators dividing the schedule's D");
  }
  const Rational x = limit_x(lp);
  const Rational y = limit_y(lp);
  const Rational shift = corrupt ? 1 : 0;
  const Rational& b1 = lp.b1;
  const Rational& b2 = lp.b2;
  const auto& a = lp.a;
  const Rational c = (lp.z + 1 / lp.z) / 2;
  const Rational scale_i = (1 - b1 * b2) * (b2 - b1) / (b1 * b2);
  const Rational base_ii = ((1 - a[0] * a[1]) * (1 - a[0] * a[2]) * (b1 - a[0]) -
                            (b1 - a[0] * a[1] * a[2]) * (1 - 2 * a[0] * c + a[0] * a[0])) /
                           (a[0] * b1);

  ConvergenceReport out;
  out.steps = schedule.steps;
  std::vector<ErrorSequence> seq_i(n_max + 1), seq_ii(n_max + 1);
  std::vector<std::vector<ErrorSequence>> seq_iii(n_max + 1, std::vector<ErrorSequence>(n_max + 1));
  for (unsigned n = 0; n <= n_max; ++n) {
    seq_i[n] = {"b_family", {{"n", long(n)}}, {}};
    seq_ii[n] = {"a_family", {{"k", long(n)}}, {}};
    for (unsigned k = 0; k <= n; ++k) seq_iii[n][k] = {"block", {{"n", long(n)}, {"k", long(k)}}, {}};
  }

  for (unsigned t : schedule.steps) {
    const QPower qp{LimitSchedule::base(t), schedule.d};
    const Rational q = qp.q();
    const LimitPoint lim = limit_map(lp, qp);
    const std::array<Rational, 4> b_fam = {b1, b2, lim.b3, lim.a4};
    const std::array<Rational, 4> a_fam = {a[0], a[1], a[2], lim.a4};
    for (unsigned n = 0; n <= n_max; ++n) {
      const Rational v_i = aw_poly(n, b_fam, q, lp.z) / q_pochhammer(q, q, n);
      const Rational target_i = power(scale_i, n) * jacobi_at(n, lp.alpha, lp.beta, x) + shift;
      seq_i[n].errors.push_back(abs(v_i - target_i));

      const Rational v_ii = aw_poly(n, a_fam, q, lp.z);
      seq_ii[n].errors.push_back(abs(v_ii - (power(base_ii, n) + shift)));

      for (unsigned k = 0; k <= n; ++k) {
        const Rational qk = qp.pow(lp.alpha + k + 1);
        const std::vector<Rational> num = {qpow(q, long(k) - long(n)),
                                           qp.pow(lp.alpha + lp.beta + n + k + 1), qk * a[0] / b1,
                                           qk * a[1] / b1, qk * a[2] / b1};
        const std::vector<Rational> den = {qk, qk * b2 / b1, qp.pow(lp.alpha + lp.beta + k + 2) / (b1 * b2),
                                           qp.pow(lp.alpha + 2 * k + 1) * a[0] * a[1] * a[2] / b1};
        const Rational v_iii = q_pochhammer(qk, q, n - k) / q_pochhammer(q, q, n - k) *
                               qhyper(num, den, q, q, n - k);
        const Rational target_iii = jacobi_at(n - k, lp.alpha + k, lp.beta + k, y) + shift;
        seq_iii[n][k].errors.push_back(abs(v_iii - target_iii));
      }
    }
  }
  for (unsigned n = 0; n <= n_max; ++n) out.sequences.push_back(std::move(seq_i[n]));
  for (unsigned n = 0; n <= n_max; ++n) out.sequences.push_back(std::move(seq_ii[n]));
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned k = 0; k <= n; ++k) out.sequences.push_back(std::move(seq_iii[n][k]));
  }
  for (auto& s : out.sequences) judge(s, criteria);
  return out;
}

VerificationReport verify_limit_identities(const Rational& alpha, const Rational& beta,
                                           const Rational& y, unsigned n_max) {
  VerificationReport rep{"koekoek", {}, 0};
  const std::vector<NamedRational> params = {{"alpha", alpha}, {"beta", beta}, {"y", y}};
  const Rational ab = alpha + beta;
  for (unsigned k = 0; k <= n_max; ++k) {
    require_nonzero(ab + k + 1, "alpha + beta + k + 1");
    require_nonzero(pochhammer(ab + k + 2, n_max), "(alpha + beta + k + 2)_n");
  }
  require_nonzero(pochhammer(ab + 2, n_max), "(alpha + beta + 2)_n");
  const Poly half_diff = Poly::linear(-y / 2, Rational(1, 2));

  CaseBuilder c_about("koekoek/expansion_about_y", params);
  CaseBuilder c_powers("koekoek/power_expansion", params);
  CaseBuilder c_powers_y("koekoek/power_expansion_at_y", params);
  CaseBuilder c_delta_fwd("koekoek/delta_forward", params);
  CaseBuilder c_delta_bwd("koekoek/delta_backward", params);
  for (unsigned n = 0; n <= n_max; ++n) {
    const Rational delta = n == 0 ? 1 : 0;
    Poly rhs_about, rhs_powers;
    Rational s_powers_y = 0, s_delta_fwd = 0, s_delta_bwd = 0;
    for (unsigned k = 0; k <= n; ++k) {
      rhs_about += half_diff.pow(k) * (jacobi_at(n - k, alpha + k, beta + k, y) *
                                   pochhammer(ab + n + 1, k) / factorial(k));
      const Rational w = (ab + 2 * k + 1) / (ab + k + 1) * factorial(n) / pochhammer(ab + k + 2, n) *
                           jacobi_at(n - k, -alpha - n - 1, -beta - n - 1, y);
      rhs_powers += jacobi(k, alpha, beta) * w;
      s_powers_y += w * jacobi_at(k, alpha, beta, y);
      s_delta_fwd += pochhammer(ab + n + 1, k) / pochhammer(ab + 2, k) *
             jacobi_at(n - k, alpha + k, beta + k, y) * jacobi_at(k, -alpha - k - 1, -beta - k - 1, y);
      s_delta_bwd += (ab + 2 * k + 1) / (ab + 1) * pochhammer(ab + 1, k) / pochhammer(ab + n + 2, k) *
             jacobi_at(k, alpha, beta, y) * jacobi_at(n - k, -alpha - n - 1, -beta - n - 1, y);
    }
    const std::vector<NamedIndex> at_n = {{"n", long(n)}};
    c_about.expect_equal(jacobi(n, alpha, beta), rhs_about, at_n);
    c_powers.expect_equal(half_diff.pow(n), rhs_powers, at_n);
    c_powers_y.expect_equal(s_powers_y, delta, at_n);
    c_delta_fwd.expect_equal(s_delta_fwd, delta, at_n);
    c_delta_bwd.expect_equal(s_delta_bwd, delta, at_n);
  }
  rep.cases.push_back(std::move(c_about).finish());
  rep.cases.push_back(std::move(c_powers).finish());
  rep.cases.push_back(std::move(c_powers_y).finish());
  rep.cases.push_back(std::move(c_delta_fwd).finish());
  rep.cases.push_back(std::move(c_delta_bwd).finish());

  const ParameterPoint p{alpha, beta};
  const TriWindow a_win = build_koekoek_a(p, y, n_max + 1);
  const TriWindow b_win = build_koekoek_b(p, y, n_max + 1);
  const TriWindow id = TriWindow::identity(0, n_max + 1);
  rep.cases.push_back(compare_windows("koekoek/AB", params, tri_mul(a_win, b_win), id));
  rep.cases.push_back(compare_windows("koekoek/BA", params, tri_mul(b_win, a_win), id));
  return rep;
}

}  // namespace trijac
