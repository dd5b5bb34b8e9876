#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "trijac/askey_wilson.hpp"
#include "trijac/harness.hpp"
#include "trijac/jacobi.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRedraw = 3;

struct VerifyFlags {
  std::string suite, format, config;
  unsigned n_max = 0, samples = 0, series_order = 0, limit_max_step = 0;
  std::size_t window = 0;
  long base_index = 0, bound = 0;
  std::uint64_t seed = 0;
  std::string limit_tol, limit_ratio;
};

struct EvalFlags {
  unsigned n = 0;
  std::string alpha = "0", beta = "0", lambda = "0", q, z, at;
  std::vector<std::string> a;
};

std::string coefficient_list(const trijac::Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& c : p.coefficients()) {
    if (!out.empty()) out += ' ';
    out += trijac::to_string(c);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

trijac::SuiteConfig build_config(const CLI::App& cmd, const VerifyFlags& f) {
  trijac::SuiteConfig cfg;
  auto given = [&](const char* name) { return cmd.count(name) > 0; };
  if (given("--config")) trijac::apply_config_text(cfg, read_file(f.config));
  if (given("--suite")) cfg.suite = f.suite;
  if (given("--n-max")) cfg.n_max = f.n_max;
  if (given("--window")) cfg.window = f.window;
  if (given("--base-index")) cfg.base_index = f.base_index;
  if (given("--samples")) cfg.samples = f.samples;
  if (given("--seed")) cfg.seed = f.seed;
  if (given("--series-order")) cfg.series_order = f.series_order;
  if (given("--format")) cfg.format = f.format;
  if (given("--limit-tol")) cfg.limit_tol = trijac::parse_decimal(f.limit_tol);
  if (given("--limit-ratio")) cfg.limit_ratio = trijac::parse_decimal(f.limit_ratio);
  if (given("--limit-max-step")) cfg.limit_max_step = f.limit_max_step;
  if (given("--bound")) cfg.bound = f.bound;
  return cfg;
}

int run_verify(const CLI::App& cmd, const VerifyFlags& flags) {
  trijac::SuiteConfig cfg;
  try {
    cfg = build_config(cmd, flags);
    trijac::validate(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::vector<std::string> log;
  const auto start = std::chrono::steady_clock::now();
  trijac::VerificationReport rep;
  try {
    rep = trijac::run_suite(cfg, &log);
  } catch (const trijac::RedrawLimit& e) {
    for (const auto& line : log) std::cerr << line << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return kExitRedraw;
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  for (const auto& line : log) std::cerr << line << "\n";
  if (cfg.format == "json") {
    std::cout << trijac::report_to_json(rep, cfg, elapsed, trijac::utc_timestamp());
  } else {
    std::cout << trijac::report_to_text(rep, elapsed);
  }
  return rep.count(trijac::Status::Fail) == 0 ? 0 : kExitFail;
}

int run_eval(const std::string& kind, const CLI::App& cmd, const EvalFlags& f) {
  using trijac::parse_rational;
  try {
    if (kind == "aw") {
      if (f.a.size() != 4) throw std::invalid_argument("--a takes four values");
      if (f.q.empty() || f.z.empty()) throw std::invalid_argument("aw needs --q and --z");
      std::array<trijac::Rational, 4> a;
      for (std::size_t i = 0; i < 4; ++i) a[i] = parse_rational(f.a[i]);
      std::cout << trijac::to_string(trijac::aw_poly(f.n, a, parse_rational(f.q), parse_rational(f.z)))
                << "\n";
      return 0;
    }
    const trijac::Poly p = kind == "jacobi"
                               ? trijac::jacobi(f.n, parse_rational(f.alpha), parse_rational(f.beta))
                               : trijac::gegenbauer(f.n, parse_rational(f.lambda));
    if (cmd.count("--at") > 0) {
      std::cout << trijac::to_string(trijac::poly_eval(p, parse_rational(f.at))) << "\n";
    } else {
      std::cout << coefficient_list(p) << "\n";
    }
    return 0;
  } catch (const trijac::SingularParameters& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of triangular Jacobi matrix identities"};
  app.require_subcommand(1);

  VerifyFlags vf;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", vf.suite, "Suite name or 'all'");
  verify->add_option("--n-max", vf.n_max, "Largest polynomial degree checked");
  verify->add_option("--window", vf.window, "Window size N");
  verify->add_option("--base-index", vf.base_index, "First window index n0");
  verify->add_option("--samples", vf.samples, "Accepted parameter draws per suite");
  verify->add_option("--seed", vf.seed, "Random seed");
  verify->add_option("--series-order", vf.series_order, "Generating function truncation order");
  verify->add_option("--format", vf.format, "json or text");
  verify->add_option("--limit-tol", vf.limit_tol, "Final error tolerance for q -> 1 limits");
  verify->add_option("--limit-ratio", vf.limit_ratio, "Largest accepted error ratio per step");
  verify->add_option("--limit-max-step", vf.limit_max_step, "Last step t of the q schedule");
  verify->add_option("--bound", vf.bound, "Bound on sampled numerators and denominators");
  verify->add_option("--config", vf.config, "Flat key = value file, overridden by flags");

  EvalFlags ef;
  std::string kind;
  CLI::App* eval = app.add_subcommand("eval", "Print a polynomial or value exactly");
  eval->add_option("kind", kind, "jacobi, gegenbauer or aw")
      ->required()
      ->check(CLI::IsMember({"jacobi", "gegenbauer", "aw"}));
  eval->add_option("--n", ef.n, "Degree")->required();
  eval->add_option("--alpha", ef.alpha, "alpha as p/q");
  eval->add_option("--beta", ef.beta, "beta as p/q");
  eval->add_option("--lambda", ef.lambda, "lambda as p/q");
  eval->add_option("--at", ef.at, "Evaluate at this point");
  eval->add_option("--a", ef.a, "Four parameters a1 a2 a3 a4")->expected(4);
  eval->add_option("--q", ef.q, "q as p/q");
  eval->add_option("--z", ef.z, "z with cos(theta) = (z + 1/z)/2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (verify->parsed()) return run_verify(*verify, vf);
  return run_eval(kind, *eval, ef);
}
