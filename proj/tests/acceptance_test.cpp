// Acceptance run: one line per criterion, nonzero exit if any criterion fails.
// Usage: acceptance_test [path-to-trijac-cli]

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "trijac/harness.hpp"

namespace {

using trijac::CaseResult;
using trijac::Rational;
using trijac::Status;
using trijac::SuiteConfig;
using trijac::VerificationReport;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Timed {
  VerificationReport rep;
  double seconds = 0;
};

Timed run(const std::string& suite) {
  SuiteConfig cfg;
  cfg.suite = suite;
  const auto start = std::chrono::steady_clock::now();
  Timed t;
  t.rep = trijac::run_suite(cfg);
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return t;
}

std::string counts(const VerificationReport& rep) {
  std::ostringstream out;
  out << rep.count(Status::Pass) << " pass, " << rep.count(Status::Fail) << " fail";
  if (rep.rejected_draws) out << ", " << rep.rejected_draws << " rejected draws";
  return out.str();
}

std::string first_failure(const VerificationReport& rep) {
  for (const auto& c : rep.cases) {
    if (c.status == Status::Fail) return "; first failure " + c.case_id;
  }
  return "";
}

std::string seconds(double s) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << s << " s";
  return out.str();
}

std::map<std::string, std::size_t> cases_by_id(const VerificationReport& rep) {
  std::map<std::string, std::size_t> m;
  for (const auto& c : rep.cases) ++m[c.case_id];
  return m;
}

Outcome all_pass(const VerificationReport& rep) {
  return {rep.count(Status::Fail) == 0 && !rep.cases.empty(), counts(rep) + first_failure(rep)};
}

Outcome criterion_theorem18() {
  const Timed t = run("theorem18");
  std::set<std::pair<std::string, std::string>> draws, hits;
  for (const auto& c : t.rep.cases) {
    const auto key = std::make_pair(trijac::to_string(c.params[0].second), trijac::to_string(c.params[1].second));
    draws.insert(key);
    if (!c.notes.empty()) hits.insert(key);
  }
  Outcome o = all_pass(t.rep);
  o.pass = o.pass && draws.size() == 25 && t.rep.cases.size() == 25 * 3 * 2 && hits.size() >= 5 &&
           t.seconds <= 30;
  o.detail += "; " + std::to_string(draws.size()) + " draws, " + std::to_string(hits.size()) +
              " hit n+alpha=0; " + seconds(t.seconds);
  return o;
}

Outcome criterion_convolution() {
  const Timed t = run("convolution");
  const auto ids = cases_by_id(t.rep);
  bool complete = ids.size() == 14;
  for (const auto& [id, n] : ids) {
    complete = complete && n == (id == "convolution/gegenbauer_linear_inverse" ? 30U : 10U);
  }
  Outcome o = all_pass(t.rep);
  o.pass = o.pass && complete;
  o.detail += "; " + std::to_string(ids.size()) + " identities";
  return o;
}

Outcome criterion_generating() {
  const Timed t = run("generating");
  const auto ids = cases_by_id(t.rep);
  std::set<std::string> lambdas;
  for (const auto& c : t.rep.cases) {
    if (c.case_id == "generating/gegenbauer") lambdas.insert(trijac::to_string(c.params[0].second));
  }
  Outcome o = all_pass(t.rep);
  const bool specials = lambdas.count("0") && lambdas.count("1/2") && lambdas.count("-1/2");
  o.pass = o.pass && ids.at("generating/jacobi") == 10 && ids.at("generating/gegenbauer") >= 13 && specials;
  return o;
}

Outcome criterion_degeneracy() {
  const Timed t = run("degeneracy");
  const auto ids = cases_by_id(t.rep);
  Outcome o = all_pass(t.rep);
  o.pass = o.pass && ids.at("degeneracy/classify") == 169 && ids.at("degeneracy/transforms") == 169 &&
           ids.at("degeneracy/parity") == 13;
  return o;
}

Outcome criterion_with_ids(const std::string& suite, const std::vector<std::string>& required,
                           std::size_t samples) {
  const Timed t = run(suite);
  const auto ids = cases_by_id(t.rep);
  Outcome o = all_pass(t.rep);
  for (const auto& id : required) {
    const auto it = ids.find(id);
    if (it == ids.end() || it->second < samples) {
      o.pass = false;
      o.detail += "; missing " + id;
    }
  }
  return o;
}

Outcome criterion_aw_connection() {
  const Timed t = run("aw_connection");
  const auto ids = cases_by_id(t.rep);
  Outcome o = all_pass(t.rep);
  for (const char* id : {"aw_connection/forward", "aw_connection/backward", "aw_connection/inverse",
                         "aw_connection/symmetry"}) {
    o.pass = o.pass && ids.count(id) && ids.at(id) == 5 * 6;
  }
  o.pass = o.pass && t.seconds <= 60;
  o.detail += "; " + seconds(t.seconds);
  return o;
}

Outcome criterion_aw_limit() {
  const Timed t = run("aw_limit");
  Rational worst = 0;
  std::string worst_id;
  bool control = false;
  for (const auto& c : t.rep.cases) {
    if (c.case_id == "aw_limit/negative_control") {
      control = c.passed();
      continue;
    }
    if (c.counterexample) {
      const Rational err = abs(c.counterexample->residual.coefficient(0));
      if (err > worst) {
        worst = err;
        worst_id = c.case_id;
      }
    }
  }
  Outcome o = all_pass(t.rep);
  o.detail = counts(t.rep) + "; negative control " + (control ? "rejected" : "NOT rejected");
  if (!worst_id.empty()) {
    o.detail += "; largest failing error " + trijac::to_decimal_string(worst, 3) + " at " + worst_id;
  }
  o.pass = o.pass && control;
  return o;
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

Outcome criterion_determinism(const std::string& cli) {
  std::string first, second;
  std::string how;
  if (!cli.empty()) {
    const std::string cmd = "\"" + cli + "\" verify --suite all --seed 42 2>/dev/null";
    int s1 = 0, s2 = 0;
    first = capture(cmd, s1);
    second = capture(cmd, s2);
    how = "CLI";
  } else {
    SuiteConfig cfg;
    cfg.suite = "all";
    first = trijac::report_to_json(trijac::run_suite(cfg), cfg, 1, trijac::utc_timestamp());
    second = trijac::report_to_json(trijac::run_suite(cfg), cfg, 2, "later");
    how = "in-process";
  }
  if (first.empty()) return {false, how + " produced no report"};
  const bool same = trijac::strip_clock_fields(first) == trijac::strip_clock_fields(second);
  return {same, how + ", " + std::to_string(first.size()) + " bytes, " +
                    (same ? "identical apart from clock fields" : "reports differ")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"L/M inverse pair", criterion_theorem18},
      {"convolution identities", criterion_convolution},
      {"generating functions", criterion_generating},
      {"degenerate parameters", criterion_degeneracy},
      {"group laws",
       [] {
         return criterion_with_ids(
             "groups",
             {"groups/P_law", "groups/Q_law", "groups/PH_law", "groups/exp_Q", "groups/exp_P",
              "groups/P00_inverse_closed", "groups/P00_inverse_gegenbauer", "groups/commute_P",
              "groups/commute_Q", "groups/conjugation/PH_L00", "groups/conjugation/L00_QH", "groups/conjugation/PH_by_QH",
              "groups/conjugation/L00_inverse"},
             10);
       }},
      {"biorthogonality",
       [] {
         return criterion_with_ids(
             "biform",
             {"biform/flipL_L_is_R", "biform/L_S_flipL", "biform/L_flipL_is_P", "biform/flipL_T_L",
              "biform/biorthogonality", "biform/mu_biorthogonality", "biform/nu_biorthogonality",
              "biform/RS", "biform/M_from_S", "biform/double_sum_support", "biform/legendre_support"},
             10);
       }},
      {"q = 1 connection pair",
       [] {
         return criterion_with_ids("koekoek",
                                   {"koekoek/AB", "koekoek/BA", "koekoek/expansion_about_y",
                                    "koekoek/power_expansion"},
                                   10);
       }},
      {"Askey-Wilson connection", criterion_aw_connection},
      {"q -> 1 limits", criterion_aw_limit},
      {"determinism", [&] { return criterion_determinism(cli); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << (i + 1) << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first
              << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
