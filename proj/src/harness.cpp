#include "trijac/harness.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "trijac/askey_wilson.hpp"
#include "trijac/biform.hpp"
#include "trijac/flow.hpp"
#include "trijac/jacobi.hpp"
#include "trijac/series.hpp"
#include "trijac/triangle.hpp"

namespace trijac {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

template <class T>
T parse_integer(const std::string& key, const std::string& text) {
  T value{};
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument(key + ": expected an integer, got '" + text + "'");
  }
  return value;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string suite_of(const std::string& id) { return id.substr(0, id.find('/')); }

Rational r(long v) { return Rational(v); }

// Redraw loop shared by the sampled suites: `attempt` returns the accepted
// sample's report or throws SingularParameters to request a redraw.
void collect_samples(unsigned samples, const std::string& suite, VerificationReport& rep,
                     std::vector<std::string>* log,
                     const std::function<VerificationReport(unsigned)>& attempt) {
  const std::size_t cap = 1000ULL * samples;
  std::size_t rejected = 0;
  for (unsigned accepted = 0; accepted < samples;) {
    try {
      rep.append(attempt(accepted));
      ++accepted;
    } catch (const SingularParameters& e) {
      ++rejected;
      ++rep.rejected_draws;
      if (log) log->push_back(suite + ": rejected draw (" + e.what() + ")");
      if (rejected > cap) {
        throw RedrawLimit(suite + ": redraw cap of " + std::to_string(cap) + " exceeded");
      }
    }
  }
}

unsigned root_multiplicity(const Poly& p, const Rational& at) {
  unsigned m = 0;
  Poly d = p;
  while (!d.is_zero() && poly_eval(d, at) == 0) {
    ++m;
    d = poly_derivative(d);
  }
  return m;
}

// --- suites -----------------------------------------------------------------

VerificationReport run_theorem18(const SuiteConfig& cfg, std::vector<std::string>* log) {
  VerificationReport rep;
  rep.suite = "theorem18";
  const unsigned samples = cfg.samples.value_or(25);
  const auto size = cfg.window.value_or(12);
  const std::vector<long> bases =
      cfg.base_index ? std::vector<long>{*cfg.base_index} : std::vector<long>{-6, 0, 3};
  const long span = static_cast<long>(size) - 1;

  // Indices n common to every window.
  long lo = bases.front(), hi = bases.front() + span;
  for (long b : bases) {
    lo = std::max(lo, b);
    hi = std::min(hi, b + span);
  }
  if (lo > hi) {
    lo = bases.front();
    hi = bases.front() + span;
  }

  Sampler s(cfg.seed, rep.suite, cfg.bound);
  collect_samples(samples, rep.suite, rep, log, [&](unsigned index) {
    VerificationReport out;
    const Rational alpha = index % 5 == 0 ? r(-s.integer(lo, hi)) : s.rational();
    const ParameterPoint p{alpha, s.rational()};
    for (long n0 : bases) {
      const std::vector<NamedRational> params = {
          {"alpha", p.alpha}, {"beta", p.beta}, {"n0", r(n0)}, {"N", r(static_cast<long>(size))}};
      const TriWindow l = build_L(p, n0, size);
      const TriWindow m = build_M(p, n0, size);
      const TriWindow id = TriWindow::identity(n0, size);
      CaseResult lm = compare_windows("theorem18/LM", params, tri_mul(l, m), id);
      CaseResult ml = compare_windows("theorem18/ML", params, tri_mul(m, l), id);
      if (is_integer(p.alpha)) {
        const long n = -p.alpha.get_num().get_si();
        if (n >= n0 && n <= n0 + span) {
          const std::string note = "expanded branch at n=" + std::to_string(n);
          lm.notes.push_back(note);
          ml.notes.push_back(note);
        }
      }
      out.cases.push_back(std::move(lm));
      out.cases.push_back(std::move(ml));
    }
    return out;
  });
  return rep;
}

VerificationReport run_convolution(const SuiteConfig& cfg, std::vector<std::string>* log) {
  VerificationReport rep;
  rep.suite = "convolution";
  const unsigned samples = cfg.samples.value_or(10);
  const unsigned n_max = cfg.n_max.value_or(10);
  for (IdentityId id : all_identities()) {
    const std::string name = to_string(id);
    Sampler s(cfg.seed, rep.suite + "/" + name, cfg.bound);
    const auto signature = identity_signature(id);
    auto run_with = [&](std::optional<Rational> fixed_mu) {
      collect_samples(samples, rep.suite + "/" + name, rep, log, [&](unsigned) {
        IdentitySpec spec{id, {}, n_max};
        for (const auto& param : signature) {
          spec.parameters.push_back({param, param == "mu" && fixed_mu ? *fixed_mu : s.rational()});
        }
        VerificationReport out = run_convolution_suite(spec);
        for (auto& c : out.cases) c.case_id = "convolution/" + c.case_id;
        return out;
      });
    };
    if (id == IdentityId::GegenbauerLinearInverse) {
      for (const Rational& mu : {Rational(-1), Rational(0), Rational(1, 2)}) run_with(mu);
    } else {
      run_with(std::nullopt);
    }
  }
  return rep;
}

VerificationReport run_generating(const SuiteConfig& cfg, std::vector<std::string>* log) {
  VerificationReport rep;
  rep.suite = "generating";
  const unsigned samples = cfg.samples.value_or(10);
  const unsigned order = cfg.n_max.value_or(cfg.series_order);
  Sampler s(cfg.seed, rep.suite, cfg.bound);

  collect_samples(samples, rep.suite + "/jacobi", rep, log, [&](unsigned) {
    const Rational a = s.rational(), b = s.rational();
    const Series gf = jacobi_generating(a, b, order);
    CaseBuilder c("generating/jacobi", {{"alpha", a}, {"beta", b}});
    for (unsigned n = 0; n <= order; ++n) c.expect_equal(gf[n], jacobi(n, a, b), {{"n", long(n)}});
    VerificationReport out;
    out.cases.push_back(std::move(c).finish());
    return out;
  });

  auto gegenbauer_case = [&](const Rational& lam) {
    const Series gf = gegenbauer_generating(lam, order);
    CaseBuilder c("generating/gegenbauer", {{"lambda", lam}});
    for (unsigned n = 0; n <= order; ++n) c.expect_equal(gf[n], gegenbauer(n, lam), {{"n", long(n)}});
    return std::move(c).finish();
  };
  for (const Rational& lam : {Rational(0), Rational(1, 2), Rational(-1, 2)}) {
    rep.cases.push_back(gegenbauer_case(lam));
  }
  collect_samples(samples, rep.suite + "/gegenbauer", rep, log, [&](unsigned) {
    VerificationReport out;
    out.cases.push_back(gegenbauer_case(s.rational()));
    return out;
  });
  return rep;
}

VerificationReport run_degeneracy(const SuiteConfig& cfg) {
  VerificationReport rep;
  rep.suite = "degeneracy";
  const unsigned n_max = cfg.n_max.value_or(12);
  const long grid = 6;
  for (long a = -grid; a <= grid; ++a) {
    for (long b = -grid; b <= grid; ++b) {
      const ParameterPoint p{a, b};
      const std::vector<NamedRational> params = {{"alpha", r(a)}, {"beta", r(b)}};
      CaseBuilder classify("degeneracy/classify", params);
      CaseBuilder transforms("degeneracy/transforms", params);
      for (unsigned n = 1; n <= n_max; ++n) {
        const Poly poly = jacobi(n, p);
        const DegeneracyReport d = classify_degenerate(n, p);
        const long at = static_cast<long>(n);
        classify.expect_equal(Rational(d.identically_zero ? 1 : 0), Rational(poly.is_zero() ? 1 : 0),
                              {{"n", at}, {"check", 0}});
        if (poly.is_zero()) continue;
        classify.expect_equal(Rational(d.true_degree.value_or(-1)),
                              Rational(static_cast<long>(*poly.degree())), {{"n", at}, {"check", 1}});
        classify.expect_equal(Rational(d.zero_mult_at_plus1), Rational(root_multiplicity(poly, 1)),
                              {{"n", at}, {"check", 2}});
        classify.expect_equal(Rational(d.zero_mult_at_minus1), Rational(root_multiplicity(poly, -1)),
                              {{"n", at}, {"check", 3}});
        for (DegenerateCase c : d.applicable_cases) {
          transforms.expect_equal(degenerate_transform(n, p, c), poly,
                                  {{"n", at}, {"case", static_cast<long>(c)}});
        }
      }
      rep.cases.push_back(std::move(classify).finish());
      rep.cases.push_back(std::move(transforms).finish());
    }
  }
  for (long a = -grid; a <= grid; ++a) {
    CaseBuilder parity("degeneracy/parity", {{"alpha", r(a)}});
    for (unsigned n = 1; n <= n_max; ++n) {
      const Poly poly = even_odd_form(n, a);
      if (poly.is_zero()) continue;
      const bool holds = n % 2 == 0 ? poly.coefficient(0) != 0 : root_multiplicity(poly, 0) == 1;
      if (!holds) parity.expect_equal(poly, Poly(), {{"n", long(n)}});
    }
    rep.cases.push_back(std::move(parity).finish());
  }
  return rep;
}

VerificationReport run_groups(const SuiteConfig& cfg, std::vector<std::string>* log) {
  VerificationReport rep;
  rep.suite = "groups";
  const unsigned samples = cfg.samples.value_or(10);
  const auto size = cfg.window.value_or(10);
  const long n0 = cfg.base_index.value_or(-5);
  Sampler s(cfg.seed, rep.suite, cfg.bound);
  collect_samples(samples, rep.suite, rep, log, [&](unsigned) {
    const ParameterPoint p1{s.rational(), s.rational()};
    const ParameterPoint p2{s.rational(), s.rational()};
    return run_group_suite(p1, p2, n0, size);
  });
  return rep;
}

VerificationReport run_biform(const SuiteConfig& cfg, std::vector<std::string>* log) {
  VerificationReport rep;
  rep.suite = "biform";
  const unsigned samples = cfg.samples.value_or(10);
  const auto size = cfg.window.value_or(11);
  const long n0 = -static_cast<long>((size - 1) / 2);
  Sampler s(cfg.seed, rep.suite, cfg.bound);
  collect_samples(samples, rep.suite, rep, log, [&](unsigned) {
    return run_biform_suite(ParameterPoint{s.rational(), s.rational()}, n0, size);
  });
  return rep;
}

VerificationReport run_koekoek(const SuiteConfig& cfg, std::vector<std::string>* log) {
  VerificationReport rep;
  rep.suite = "koekoek";
  const unsigned samples = cfg.samples.value_or(10);
  const unsigned n_max = cfg.n_max.value_or(10);
  Sampler s(cfg.seed, rep.suite, cfg.bound);
  collect_samples(samples, rep.suite, rep, log, [&](unsigned) {
    const Rational a = s.rational(), b = s.rational(), y = s.rational();
    return verify_limit_identities(a, b, y, n_max);
  });
  return rep;
}

VerificationReport run_aw_connection(const SuiteConfig& cfg, std::vector<std::string>* log) {
  VerificationReport rep;
  rep.suite = "aw_connection";
  const unsigned samples = cfg.samples.value_or(5);
  const unsigned n_max = cfg.n_max.value_or(5);
  const std::vector<Rational> zs = {r(1), r(2), r(3), r(-2), Rational(5, 3), Rational(-4, 3)};
  Sampler s(cfg.seed, rep.suite, cfg.bound);
  collect_samples(samples, rep.suite, rep, log, [&](unsigned) {
    QPoint pt;
    const long den = s.integer(2, std::max(2L, cfg.bound));
    pt.q = Rational(s.integer(1, den - 1)) / den;
    for (auto& a : pt.a) a = s.nonzero();
    for (auto& b : pt.b) b = s.nonzero();
    for (const Rational& z : zs) {
      pt.z = z;
      pt.validate(n_max);
    }
    VerificationReport out;
    for (const Rational& z : zs) {
      pt.z = z;
      out.append(verify_connection(n_max, pt));
    }
    return out;
  });
  return rep;
}

VerificationReport run_aw_limit(const SuiteConfig& cfg) {
  VerificationReport rep;
  rep.suite = "aw_limit";
  const unsigned n_max = cfg.n_max.value_or(3);
  const LimitCriteria criteria{cfg.limit_ratio, cfg.limit_tol};

  struct LimitCase {
    std::string label;
    Rational alpha, beta;
    unsigned d;
  };
  const std::vector<LimitCase> cases = {
      {"(0,0)", 0, 0, 1}, {"(1,2)", 1, 2, 1}, {"(1/2,0)", Rational(1, 2), 0, 2}};

  auto setup = [&](const LimitCase& c) {
    LimitParams lp{Rational(1, 3), Rational(1, 2), {Rational(1, 5), Rational(1, 7), Rational(1, 11)},
                   r(2), c.alpha, c.beta};
    LimitSchedule schedule;
    schedule.d = c.d;
    schedule.steps.clear();
    for (unsigned t = 3; t <= cfg.limit_max_step; ++t) schedule.steps.push_back(t);
    return std::make_pair(lp, schedule);
  };
  auto params_of = [](const LimitCase& c) {
    return std::vector<NamedRational>{{"alpha", c.alpha}, {"beta", c.beta}, {"D", r(c.d)}};
  };

  for (const LimitCase& c : cases) {
    const auto [lp, schedule] = setup(c);
    const ConvergenceReport conv = check_q_limits(lp, schedule, n_max, criteria);
    rep.append(conv.to_report("aw_limit/" + c.label, params_of(c)));
  }

  const LimitCase& control = cases.front();
  const auto [lp, schedule] = setup(control);
  const ConvergenceReport corrupted = check_q_limits(lp, schedule, n_max, criteria, true);
  CaseResult neg = corrupted.passed()
                       ? fail_case("aw_limit/negative_control", params_of(control),
                                   Counterexample{{{"t", long(schedule.steps.back())}}, Poly()})
                       : pass_case("aw_limit/negative_control", params_of(control));
  neg.notes.push_back(corrupted.passed() ? "corrupted targets were accepted"
                                         : "corrupted targets rejected");
  rep.cases.push_back(std::move(neg));
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"theorem18", "convolution",   "generating",
                                                 "degeneracy", "groups",       "biform",
                                                 "koekoek",   "aw_connection", "aw_limit"};
  return names;
}

void validate(const SuiteConfig& cfg) {
  const auto& names = suite_names();
  if (cfg.suite != "all" && std::find(names.begin(), names.end(), cfg.suite) == names.end()) {
    throw std::invalid_argument("unknown suite '" + cfg.suite + "'");
  }
  if (cfg.window && (*cfg.window < 1 || *cfg.window > 64)) {
    throw std::invalid_argument("window must be in [1, 64]");
  }
  if (cfg.window && (cfg.suite == "biform" || cfg.suite == "all") && *cfg.window % 2 == 0) {
    throw std::invalid_argument("biform needs an odd window for a symmetric index range");
  }
  if (cfg.suite == "biform" && cfg.base_index &&
      *cfg.base_index != -static_cast<long>((cfg.window.value_or(11) - 1) / 2)) {
    throw std::invalid_argument("biform: base index must be -(N-1)/2");
  }
  if (cfg.samples && (*cfg.samples < 1 || *cfg.samples > 100000)) {
    throw std::invalid_argument("samples must be in [1, 100000]");
  }
  if (cfg.n_max && *cfg.n_max > 40) throw std::invalid_argument("n-max must be at most 40");
  if (cfg.series_order < 1 || cfg.series_order > 40) {
    throw std::invalid_argument("series-order must be in [1, 40]");
  }
  if (cfg.format != "json" && cfg.format != "text") {
    throw std::invalid_argument("format must be json or text");
  }
  if (cfg.limit_ratio <= 0 || cfg.limit_ratio > 1) {
    throw std::invalid_argument("limit-ratio must be in (0, 1]");
  }
  if (cfg.limit_tol <= 0) throw std::invalid_argument("limit-tol must be positive");
  if (cfg.limit_max_step < 4 || cfg.limit_max_step > 40) {
    throw std::invalid_argument("limit-max-step must be in [4, 40]");
  }
  if (cfg.bound < 1 || cfg.bound > 1000000) throw std::invalid_argument("bound must be in [1, 10^6]");
}

void apply_config_text(SuiteConfig& cfg, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  unsigned line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    std::replace(key.begin(), key.end(), '-', '_');
    if (key == "suite") {
      cfg.suite = value;
    } else if (key == "n_max") {
      cfg.n_max = parse_integer<unsigned>(key, value);
    } else if (key == "window") {
      cfg.window = parse_integer<std::size_t>(key, value);
    } else if (key == "base_index") {
      cfg.base_index = parse_integer<long>(key, value);
    } else if (key == "samples") {
      cfg.samples = parse_integer<unsigned>(key, value);
    } else if (key == "seed") {
      cfg.seed = parse_integer<std::uint64_t>(key, value);
    } else if (key == "series_order") {
      cfg.series_order = parse_integer<unsigned>(key, value);
    } else if (key == "format") {
      cfg.format = value;
    } else if (key == "limit_tol") {
      cfg.limit_tol = parse_decimal(value);
    } else if (key == "limit_ratio") {
      cfg.limit_ratio = parse_decimal(value);
    } else if (key == "limit_max_step") {
      cfg.limit_max_step = parse_integer<unsigned>(key, value);
    } else if (key == "bound") {
      cfg.bound = parse_integer<long>(key, value);
    } else {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": unknown key '" + key +
                                  "'");
    }
  }
}

Sampler::Sampler(std::uint64_t seed, const std::string& stream, long bound) : bound_(bound) {
  std::uint64_t state = seed ^ fnv1a(stream);
  std::seed_seq seq{splitmix64(state), splitmix64(state), splitmix64(state), splitmix64(state)};
  rng_.seed(seq);
}

long Sampler::integer(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("Sampler::integer: empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t v;
  do {
    v = rng_();
  } while (v >= limit);
  return lo + static_cast<long>(v % range);
}

Rational Sampler::rational() {
  const long p = integer(-bound_, bound_);
  const long q = integer(1, bound_);
  return Rational(p) / q;
}

Rational Sampler::nonzero() {
  Rational v;
  do {
    v = rational();
  } while (v == 0);
  return v;
}

VerificationReport run_suite(const SuiteConfig& cfg, std::vector<std::string>* log) {
  validate(cfg);
  if (cfg.suite == "all") {
    VerificationReport rep;
    rep.suite = "all";
    for (const auto& name : suite_names()) {
      SuiteConfig sub = cfg;
      sub.suite = name;
      if (name == "biform") sub.base_index.reset();
      rep.append(run_suite(sub, log));
    }
    return rep;
  }
  VerificationReport rep;
  if (cfg.suite == "theorem18") rep = run_theorem18(cfg, log);
  else if (cfg.suite == "convolution") rep = run_convolution(cfg, log);
  else if (cfg.suite == "generating") rep = run_generating(cfg, log);
  else if (cfg.suite == "degeneracy") rep = run_degeneracy(cfg);
  else if (cfg.suite == "groups") rep = run_groups(cfg, log);
  else if (cfg.suite == "biform") rep = run_biform(cfg, log);
  else if (cfg.suite == "koekoek") rep = run_koekoek(cfg, log);
  else if (cfg.suite == "aw_connection") rep = run_aw_connection(cfg, log);
  else rep = run_aw_limit(cfg);
  for (auto& c : rep.cases) {
    if (suite_of(c.case_id) != rep.suite) c.case_id = rep.suite + "/" + c.case_id;
  }
  return rep;
}

}  // namespace trijac
