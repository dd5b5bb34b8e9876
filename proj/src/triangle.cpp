#include "trijac/triangle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace trijac {

namespace {

unsigned offset(long m, long n) {
  if (m < n) throw std::invalid_argument("entry above the diagonal");
  return static_cast<unsigned>(m - n);
}

}  // namespace

// --- TriWindow ---------------------------------------------------------------

TriWindow::TriWindow(long base_index, std::size_t size)
    : base_(base_index), size_(size), entries_(size * (size + 1) / 2) {
  if (size == 0) throw std::invalid_argument("window size must be positive");
}

TriWindow::TriWindow(long base_index, std::size_t size, const EntryFn& entry)
    : TriWindow(base_index, size) {
  for (long m = base_; m <= last_index(); ++m) {
    for (long n = base_; n <= m; ++n) entries_[slot(m, n)] = entry(m, n);
  }
  refresh_flags();
}

TriWindow TriWindow::identity(long base_index, std::size_t size) {
  return TriWindow(base_index, size,
                   [](long m, long n) { return m == n ? Poly::constant(1) : Poly(); });
}

TriWindow TriWindow::zero(long base_index, std::size_t size) {
  TriWindow w(base_index, size);
  w.refresh_flags();
  return w;
}

std::size_t TriWindow::slot(long m, long n) const {
  const auto r = static_cast<std::size_t>(m - base_);
  const auto c = static_cast<std::size_t>(n - base_);
  return r * (r + 1) / 2 + c;
}

void TriWindow::refresh_flags() {
  unitriangular_ = true;
  const Poly one = Poly::constant(1);
  for (long i = base_; i <= last_index(); ++i) {
    if (entries_[slot(i, i)] != one) {
      unitriangular_ = false;
      break;
    }
  }
}

const Poly& TriWindow::at(long m, long n) const {
  static const Poly kZero;
  if (!contains(m) || !contains(n)) {
    throw std::out_of_range("index (" + std::to_string(m) + ", " + std::to_string(n) +
                            ") outside window [" + std::to_string(base_) + ", " +
                            std::to_string(last_index()) + "]");
  }
  if (m < n) return kZero;
  return entries_[slot(m, n)];
}

bool TriWindow::is_toeplitz() const {
  for (long m = base_ + 1; m <= last_index(); ++m) {
    for (long n = base_ + 1; n <= m; ++n) {
      if (at(m, n) != at(m - 1, n - 1)) return false;
    }
  }
  return true;
}

TriWindow& TriWindow::operator+=(const TriWindow& other) {
  if (!same_shape(other)) throw std::invalid_argument("window mismatch in addition");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  refresh_flags();
  return *this;
}

TriWindow& TriWindow::operator*=(const Rational& c) {
  for (auto& e : entries_) e *= c;
  refresh_flags();
  return *this;
}

TriWindow tri_mul(const TriWindow& a, const TriWindow& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("tri_mul: window mismatch");
  return TriWindow(a.base_index(), a.size(), [&](long m, long n) {
    Poly sum;
    for (long k = n; k <= m; ++k) {
      const Poly& left = a.at(m, k);
      if (left.is_zero()) continue;
      const Poly& right = b.at(k, n);
      if (right.is_zero()) continue;
      sum += left * right;
    }
    return sum;
  });
}

TriWindow tri_inverse(const TriWindow& a) {
  if (!a.unitriangular()) throw std::invalid_argument("tri_inverse: window is not unitriangular");
  const long n0 = a.base_index();
  const auto size = a.size();
  // Column-by-column forward substitution: X_{m,n} = -sum_{k=n}^{m-1} A_{m,k} X_{k,n}.
  std::vector<std::vector<Poly>> cols(size);
  for (std::size_t c = 0; c < size; ++c) {
    const long n = n0 + static_cast<long>(c);
    auto& col = cols[c];
    col.resize(size - c);
    col[0] = Poly::constant(1);
    for (long m = n + 1; m <= a.last_index(); ++m) {
      Poly acc;
      for (long k = n; k < m; ++k) {
        const Poly& left = a.at(m, k);
        if (!left.is_zero()) acc += left * col[static_cast<std::size_t>(k - n)];
      }
      col[static_cast<std::size_t>(m - n)] = -acc;
    }
  }
  return TriWindow(n0, size, [&](long m, long n) {
    return cols[static_cast<std::size_t>(n - n0)][static_cast<std::size_t>(m - n)];
  });
}

std::optional<Counterexample> first_difference(const TriWindow& a, const TriWindow& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("first_difference: window mismatch");
  for (long m = a.base_index(); m <= a.last_index(); ++m) {
    for (long n = a.base_index(); n <= m; ++n) {
      if (a.at(m, n) != b.at(m, n)) {
        return Counterexample{{{"m", m}, {"n", n}}, a.at(m, n) - b.at(m, n)};
      }
    }
  }
  return std::nullopt;
}

CaseResult compare_windows(std::string id, std::vector<NamedRational> params, const TriWindow& lhs,
                           const TriWindow& rhs) {
  if (auto ce = first_difference(lhs, rhs)) {
    return fail_case(std::move(id), std::move(params), std::move(*ce));
  }
  return pass_case(std::move(id), std::move(params));
}

// --- L and M -----------------------------------------------------------------

Poly l_entry(const ParameterPoint& p, long m, long n) {
  return jacobi(offset(m, n), p.alpha + n, p.beta + n);
}

Poly m_entry_closed(const ParameterPoint& p, long m, long n) {
  const Rational denom = p.alpha + n;
  if (denom == 0) {
    throw ApparentSingularity("M entry: n + alpha vanishes at n=" + std::to_string(n));
  }
  const unsigned d = offset(m, n);
  const Rational a = -p.alpha - m;
  const Rational b = -p.beta - m;
  Poly result = jacobi(d, a, b) * ((m + p.beta) / denom);
  result += jacobi(d, a, b - 1) * ((p.alpha - p.beta) / denom);
  return result;
}

Poly m_entry_expanded(const ParameterPoint& p, long m, long n) {
  const unsigned d = offset(m, n);
  if (d == 0) return Poly::constant(1);
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational c = -a - b - m - n;  // the shifted-factorial base in both terms
  const Poly u = Poly::linear(Rational(-1, 2), Rational(1, 2));
  std::vector<Rational> coeff(d + 1);
  for (unsigned k = 0; k < d; ++k) {
    const Rational front = (m + b) * pochhammer(c + 1, k) + (a - b) * pochhammer(c, k);
    coeff[k] = -front * pochhammer(-a - m + k + 1, d - k - 1) / (factorial(k) * factorial(d - k));
  }
  coeff[d] = -(a + b + 2 * m) * pochhammer(c + 1, d - 1) / factorial(d);
  Poly acc;
  for (unsigned k = d + 1; k-- > 0;) {
    acc *= u;
    acc += Poly::constant(coeff[k]);
  }
  return acc;
}

Poly m_entry(const ParameterPoint& p, long m, long n) {
  if (p.alpha + n == 0) return m_entry_expanded(p, m, n);
  return m_entry_closed(p, m, n);
}

TriWindow build_L(const ParameterPoint& p, long n0, std::size_t size) {
  return TriWindow(n0, size, [&](long m, long n) { return l_entry(p, m, n); });
}

TriWindow build_M(const ParameterPoint& p, long n0, std::size_t size) {
  return TriWindow(n0, size, [&](long m, long n) { return m_entry(p, m, n); });
}

// --- Toeplitz families ---------------------------------------------------------

TriWindow build_P(const ParameterPoint& p, long n0, std::size_t size) {
  std::vector<Poly> diag(size);
  for (unsigned d = 0; d < size; ++d) diag[d] = jacobi(d, p);
  return TriWindow(n0, size, [&](long m, long n) { return diag[offset(m, n)]; });
}

TriWindow build_Q(const ParameterPoint& p, long n0, std::size_t size) {
  std::vector<Poly> diag(size);
  for (unsigned d = 0; d < size; ++d) diag[d] = jacobi(d, p.alpha - d, p.beta - d);
  return TriWindow(n0, size, [&](long m, long n) { return diag[offset(m, n)]; });
}

// --- Koekoek pair ----------------------------------------------------------------

TriWindow build_koekoek_a(const ParameterPoint& p, const Rational& y, std::size_t size) {
  const Rational s = p.alpha + p.beta;
  return TriWindow(0, size, [&](long m, long n) {
    const auto nn = static_cast<unsigned>(n);
    const Rational c = pochhammer(s + m + 1, nn) / factorial(nn);
    return Poly::constant(c * jacobi_at(offset(m, n), p.alpha + n, p.beta + n, y));
  });
}

TriWindow build_koekoek_b(const ParameterPoint& p, const Rational& y, std::size_t size) {
  const Rational s = p.alpha + p.beta;
  for (std::size_t n = 0; n < size; ++n) {
    if (s + n + 1 == 0 || pochhammer(s + n + 2, static_cast<unsigned>(size - 1)) == 0) {
      throw SingularParameters("build_koekoek_b: vanishing denominator for alpha+beta=" + to_string(s));
    }
  }
  return TriWindow(0, size, [&](long m, long n) {
    const auto mm = static_cast<unsigned>(m);
    const Rational c = (s + 2 * n + 1) / (s + n + 1) * factorial(mm) / pochhammer(s + n + 2, mm);
    return Poly::constant(c * jacobi_at(offset(m, n), -p.alpha - m - 1, -p.beta - m - 1, y));
  });
}

// --- Convolution identities ---------------------------------------------------------

std::string to_string(IdentityId id) {
  switch (id) {
    case IdentityId::ShiftedConvolution: return "shifted_convolution";
    case IdentityId::WeightedConvolution: return "weighted_convolution";
    case IdentityId::LegendreConvolution: return "legendre_convolution";
    case IdentityId::WeightedLegendreConvolution: return "weighted_legendre_convolution";
    case IdentityId::TwoTermInverse: return "two_term_inverse";
    case IdentityId::SymmetricInverse: return "symmetric_inverse";
    case IdentityId::TwoIndexInverse: return "two_index_inverse";
    case IdentityId::LegendreSplitting: return "legendre_splitting";
    case IdentityId::GegenbauerPochhammerInverse: return "gegenbauer_pochhammer_inverse";
    case IdentityId::PochhammerInverse: return "pochhammer_inverse";
    case IdentityId::ReversedPochhammerInverse: return "reversed_pochhammer_inverse";
    case IdentityId::GegenbauerLinearInverse: return "gegenbauer_linear_inverse";
    case IdentityId::GegenbauerInverse: return "gegenbauer_inverse";
    case IdentityId::GegenbauerAddition: return "gegenbauer_addition";
  }
  return "?";
}

std::vector<IdentityId> all_identities() {
  return {IdentityId::ShiftedConvolution, IdentityId::WeightedConvolution, IdentityId::LegendreConvolution, IdentityId::WeightedLegendreConvolution, IdentityId::TwoTermInverse,
          IdentityId::SymmetricInverse,  IdentityId::TwoIndexInverse, IdentityId::LegendreSplitting, IdentityId::GegenbauerPochhammerInverse, IdentityId::PochhammerInverse,
          IdentityId::ReversedPochhammerInverse, IdentityId::GegenbauerLinearInverse, IdentityId::GegenbauerInverse, IdentityId::GegenbauerAddition};
}

IdentityId identity_from_string(const std::string& name) {
  for (auto id : all_identities()) {
    if (to_string(id) == name) return id;
  }
  throw std::invalid_argument("unknown identity '" + name + "'");
}

std::vector<std::string> identity_signature(IdentityId id) {
  switch (id) {
    case IdentityId::ShiftedConvolution:
    case IdentityId::WeightedConvolution:
    case IdentityId::LegendreSplitting: return {"alpha1", "beta1", "alpha2", "beta2"};
    case IdentityId::LegendreConvolution:
    case IdentityId::WeightedLegendreConvolution:
    case IdentityId::TwoTermInverse:
    case IdentityId::TwoIndexInverse:
    case IdentityId::PochhammerInverse:
    case IdentityId::ReversedPochhammerInverse: return {"alpha", "beta"};
    case IdentityId::SymmetricInverse:
    case IdentityId::GegenbauerPochhammerInverse: return {"alpha"};
    case IdentityId::GegenbauerLinearInverse: return {"mu", "nu"};
    case IdentityId::GegenbauerInverse: return {"nu"};
    case IdentityId::GegenbauerAddition: return {"nu", "lambda"};
  }
  return {};
}

namespace {

class ParamView {
 public:
  explicit ParamView(const IdentitySpec& spec) {
    const auto names = identity_signature(spec.id);
    if (names.size() != spec.parameters.size()) {
      throw std::invalid_argument(to_string(spec.id) + ": expected " + std::to_string(names.size()) +
                                  " parameters");
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (spec.parameters[i].first != names[i]) {
        throw std::invalid_argument(to_string(spec.id) + ": parameter " + std::to_string(i) +
                                    " must be named '" + names[i] + "', got '" +
                                    spec.parameters[i].first + "'");
      }
      values_[names[i]] = spec.parameters[i].second;
    }
  }
  const Rational& operator[](const std::string& name) const { return values_.at(name); }

 private:
  std::map<std::string, Rational> values_;
};

void require_nonzero(const Rational& v, const std::string& what) {
  if (v == 0) throw SingularParameters("vanishing denominator: " + what);
}

Poly delta(long a, long b) { return a == b ? Poly::constant(1) : Poly(); }

// Left and right sides of a single-index identity at index n.
struct Sides {
  Poly lhs;
  Poly rhs;
};

Sides eval_identity(IdentityId id, const ParamView& v, unsigned n) {
  Sides s;
  switch (id) {
    case IdentityId::ShiftedConvolution:
    case IdentityId::WeightedConvolution: {
      const Rational &a1 = v["alpha1"], &b1 = v["beta1"], &a2 = v["alpha2"], &b2 = v["beta2"];
      const bool weighted = id == IdentityId::WeightedConvolution;
      for (unsigned k = 0; k <= n; ++k) {
        if (weighted && k == 0) continue;
        Poly term = jacobi(n - k, a1 + k, b1 + k) * jacobi(k, a2 - k, b2 - k);
        if (weighted) term *= Rational(k);
        s.lhs += term;
      }
      const Rational a = a1 + a2;
      const Rational b = b1 + b2;
      if (!weighted) {
        s.rhs = jacobi(n, a, b);
      } else {
        const Rational denom = a + b + 2 * n;
        require_nonzero(denom, "alpha1+alpha2+beta1+beta2+2n");
        s.rhs = jacobi(n, a, b) * (n * (a2 + b2) / denom) +
                jacobi(n - 1, a, b) * ((a2 * b1 - a1 * b2 + n * (a2 - b2)) / denom);
      }
      break;
    }
    case IdentityId::LegendreConvolution:
    case IdentityId::WeightedLegendreConvolution: {
      const Rational &a = v["alpha"], &b = v["beta"];
      const bool weighted = id == IdentityId::WeightedLegendreConvolution;
      for (unsigned k = 0; k <= n; ++k) {
        if (weighted && k == 0) continue;
        Poly term = jacobi(n - k, a + k, b + k) * jacobi(k, -a - k, -b - k);
        if (weighted) term *= Rational(k);
        s.lhs += term;
      }
      if (!weighted) {
        s.rhs = legendre(n);
      } else {
        s.rhs = legendre(n) * (-(a + b) / 2) + legendre(n - 1) * ((b - a) / 2);
      }
      break;
    }
    case IdentityId::TwoTermInverse: {
      const Rational &a = v["alpha"], &b = v["beta"];
      require_nonzero(a, "alpha");
      for (unsigned k = 0; k <= n; ++k) {
        Poly inner = jacobi(k, -a - k, -b - k) * ((k + b) / a) +
                     jacobi(k, -a - k, -b - k - 1) * ((a - b) / a);
        s.lhs += jacobi(n - k, a + k, b + k) * inner;
      }
      s.rhs = delta(n, 0);
      break;
    }
    case IdentityId::SymmetricInverse: {
      const Rational& a = v["alpha"];
      require_nonzero(a, "alpha");
      for (unsigned k = 0; k <= n; ++k) {
        s.lhs += jacobi(n - k, a + k, a + k) * jacobi(k, -a - k, -a - k) * ((k + a) / a);
      }
      s.rhs = delta(n, 0);
      break;
    }
    case IdentityId::LegendreSplitting: {
      const Rational &a1 = v["alpha1"], &b1 = v["beta1"], &a2 = v["alpha2"], &b2 = v["beta2"];
      for (unsigned k = 0; k <= n; ++k) {
        s.lhs += jacobi(n - k, a1, b1) * jacobi(k, a2, b2);
        s.rhs += legendre(n - k) * jacobi(k, a1 + a2, b1 + b2);
      }
      break;
    }
    case IdentityId::GegenbauerPochhammerInverse: {
      const Rational& a = v["alpha"];
      for (unsigned k = 0; k <= n; ++k) {
        const Rational denom = pochhammer(2 * a + 2, k);
        require_nonzero(denom, "(2 alpha + 2)_k");
        s.lhs += jacobi(n - k, a + k, a + k) * jacobi(k, -a - k - 1, -a - k - 1) *
                 (pochhammer(n + 2 * a + 1, k) / denom);
      }
      s.rhs = delta(n, 0);
      break;
    }
    case IdentityId::PochhammerInverse: {
      const Rational &a = v["alpha"], &b = v["beta"];
      for (unsigned k = 0; k <= n; ++k) {
        const Rational denom = pochhammer(a + b + 2, k);
        require_nonzero(denom, "(alpha + beta + 2)_k");
        s.lhs += jacobi(n - k, a + k, b + k) * jacobi(k, -a - k - 1, -b - k - 1) *
                 (pochhammer(a + b + n + 1, k) / denom);
      }
      s.rhs = delta(n, 0);
      break;
    }
    case IdentityId::ReversedPochhammerInverse: {
      const Rational &a = v["alpha"], &b = v["beta"];
      require_nonzero(a + b + 1, "alpha + beta + 1");
      for (unsigned k = 0; k <= n; ++k) {
        const Rational denom = pochhammer(a + b + n + 2, k);
        require_nonzero(denom, "(alpha + beta + n + 2)_k");
        const Rational c = (a + b + 2 * k + 1) / (a + b + 1) * pochhammer(a + b + 1, k) / denom;
        s.lhs += jacobi(k, a, b) * jacobi(n - k, -a - n - 1, -b - n - 1) * c;
      }
      s.rhs = delta(n, 0);
      break;
    }
    case IdentityId::GegenbauerLinearInverse: {
      const Rational &mu = v["mu"], &nu = v["nu"];
      for (unsigned k = 0; k <= n; ++k) {
        const Rational lam = mu * k + nu;
        require_nonzero(lam, "mu k + nu");
        s.lhs += gegenbauer(k, lam) * gegenbauer(n - k, -lam) * (nu / lam);
      }
      s.rhs = delta(n, 0);
      break;
    }
    case IdentityId::GegenbauerInverse: {
      const Rational& nu = v["nu"];
      for (unsigned k = 0; k <= n; ++k) s.lhs += gegenbauer(k, nu) * gegenbauer(n - k, -nu);
      s.rhs = delta(n, 0);
      break;
    }
    case IdentityId::GegenbauerAddition: {
      const Rational &nu = v["nu"], &lam = v["lambda"];
      for (unsigned k = 0; k <= n; ++k) s.lhs += gegenbauer(k, nu) * gegenbauer(n - k, lam);
      s.rhs = gegenbauer(n, nu + lam);
      break;
    }
    case IdentityId::TwoIndexInverse:
      throw std::logic_error("TwoIndexInverse is a two-index identity");
  }
  return s;
}

Poly two_index_lhs(const Rational& a, const Rational& b, long m, long n) {
  const Rational denom = n + a;
  Poly sum;
  for (long k = n; k <= m; ++k) {
    const auto d = static_cast<unsigned>(k - n);
    Poly inner = jacobi(d, -a - k, -b - k) * ((k + b) / denom) +
                 jacobi(d, -a - k, -b - k - 1) * ((a - b) / denom);
    sum += jacobi(static_cast<unsigned>(m - k), a + k, b + k) * inner;
  }
  return sum;
}

}  // namespace

VerificationReport run_convolution_suite(const IdentitySpec& spec) {
  const ParamView v(spec);
  VerificationReport report;
  report.suite = "convolution";
  CaseBuilder builder(to_string(spec.id), spec.parameters);

  if (spec.id == IdentityId::TwoIndexInverse) {
    const Rational &a = v["alpha"], &b = v["beta"];
    const long span = static_cast<long>(spec.n_max);
    for (long n = -span; n <= span && !builder.failed(); ++n) {
      if (n + a == 0) {
        builder.note("n=" + std::to_string(n) + " skipped: n + alpha = 0");
        continue;
      }
      for (long m = n; m <= n + span; ++m) {
        if (!builder.expect_equal(two_index_lhs(a, b, m, n), delta(m, n), {{"m", m}, {"n", n}})) break;
      }
    }
  } else {
    const bool needs_positive = spec.id == IdentityId::WeightedConvolution || spec.id == IdentityId::WeightedLegendreConvolution;
    for (unsigned n = needs_positive ? 1 : 0; n <= spec.n_max; ++n) {
      const Sides s = eval_identity(spec.id, v, n);
      if (!builder.expect_equal(s.lhs, s.rhs, {{"n", static_cast<long>(n)}})) break;
    }
  }
  report.cases.push_back(std::move(builder).finish());
  return report;
}

}  // namespace trijac
