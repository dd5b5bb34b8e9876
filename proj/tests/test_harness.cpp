#include <set>

#include "doctest.h"
#include "json.hpp"
#include "trijac/harness.hpp"

using trijac::Rational;
using trijac::Sampler;
using trijac::SuiteConfig;

namespace {

SuiteConfig small(const std::string& suite) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.samples = 2;
  return cfg;
}

std::string json_of(const SuiteConfig& cfg, const std::string& stamp = "T") {
  return trijac::report_to_json(trijac::run_suite(cfg), cfg, 0, stamp);
}

}  // namespace

TEST_CASE("sampler draws are bounded and reproducible") {
  Sampler a(42, "stream", 9), b(42, "stream", 9), c(42, "other", 9);
  bool differs = false;
  for (int i = 0; i < 200; ++i) {
    const Rational x = a.rational();
    CHECK(x == b.rational());
    if (x != c.rational()) differs = true;
    CHECK(abs(x.get_num()) <= 9);
    CHECK(x.get_den() <= 9);
    CHECK(a.nonzero() != 0);
    b.nonzero();
    c.nonzero();
    const long k = a.integer(-3, 5);
    CHECK(k == b.integer(-3, 5));
    c.integer(-3, 5);
    CHECK(k >= -3);
    CHECK(k <= 5);
  }
  CHECK(differs);
  CHECK_THROWS_AS(a.integer(2, 1), std::invalid_argument);
}

TEST_CASE("config text") {
  SuiteConfig cfg;
  trijac::apply_config_text(cfg,
                            "# comment\n"
                            "suite = groups\n"
                            "n-max = 7\n"
                            "\n"
                            "window=9  # trailing\n"
                            "base_index = -4\n"
                            "seed = 18446744073709551615\n"
                            "limit_tol = 2.5e-3\n"
                            "limit-ratio = 0.5\n");
  CHECK(cfg.suite == "groups");
  CHECK(cfg.n_max == 7U);
  CHECK(cfg.window == 9U);
  CHECK(cfg.base_index == -4);
  CHECK(cfg.seed == UINT64_MAX);
  CHECK(cfg.limit_tol == Rational(1, 400));
  CHECK(cfg.limit_ratio == Rational(1, 2));
  CHECK_THROWS_AS(trijac::apply_config_text(cfg, "colour = red\n"), std::invalid_argument);
  CHECK_THROWS_AS(trijac::apply_config_text(cfg, "samples = many\n"), std::invalid_argument);
  CHECK_THROWS_AS(trijac::apply_config_text(cfg, "samples\n"), std::invalid_argument);
}

TEST_CASE("validation rejects bad knobs") {
  auto bad = [](auto mutate) {
    SuiteConfig cfg;
    mutate(cfg);
    return cfg;
  };
  CHECK_NOTHROW(trijac::validate(SuiteConfig{}));
  CHECK_THROWS_AS(trijac::validate(bad([](SuiteConfig& c) { c.suite = "unknown"; })),
                  std::invalid_argument);
  CHECK_THROWS_AS(trijac::validate(bad([](SuiteConfig& c) { c.format = "xml"; })),
                  std::invalid_argument);
  CHECK_THROWS_AS(trijac::validate(bad([](SuiteConfig& c) { c.samples = 0; })),
                  std::invalid_argument);
  CHECK_THROWS_AS(trijac::validate(bad([](SuiteConfig& c) { c.limit_tol = 0; })),
                  std::invalid_argument);
  CHECK_THROWS_AS(trijac::validate(bad([](SuiteConfig& c) { c.limit_ratio = 2; })),
                  std::invalid_argument);
  CHECK_THROWS_AS(trijac::validate(bad([](SuiteConfig& c) {
                    c.suite = "biform";
                    c.window = 10;
                  })),
                  std::invalid_argument);
  CHECK_THROWS_AS(trijac::validate(bad([](SuiteConfig& c) {
                    c.suite = "biform";
                    c.base_index = 0;
                  })),
                  std::invalid_argument);
}

TEST_CASE("identical configs give identical reports") {
  for (const auto& name : trijac::suite_names()) {
    if (name == "degeneracy") continue;
    CAPTURE(name);
    const SuiteConfig cfg = small(name);
    CHECK(json_of(cfg, "first") != json_of(cfg, "second"));
    CHECK(trijac::strip_clock_fields(json_of(cfg, "first")) ==
          trijac::strip_clock_fields(json_of(cfg, "second")));
  }
  SuiteConfig other = small("groups");
  other.seed = 43;
  CHECK(trijac::strip_clock_fields(json_of(small("groups"))) !=
        trijac::strip_clock_fields(json_of(other)));
}

TEST_CASE("report schema and the counterexample contract") {
  SuiteConfig cfg = small("aw_limit");
  const auto rep = trijac::run_suite(cfg);
  const auto doc = nlohmann::json::parse(trijac::report_to_json(rep, cfg, 12.7, "2026-01-01T00:00:00Z"));
  CHECK(doc["schema"] == 1);
  CHECK(doc["suite"] == "aw_limit");
  CHECK(doc["config_echo"]["seed"] == "42");
  CHECK(doc["elapsed_ms"] == 12);
  CHECK(doc["timestamp"] == "2026-01-01T00:00:00Z");
  std::size_t fails = 0;
  for (const auto& c : doc["cases"]) {
    REQUIRE(c.contains("case_id"));
    REQUIRE(c.contains("params"));
    CHECK(c["case_id"].get<std::string>().rfind("aw_limit/", 0) == 0);
    if (c["status"] == "FAIL") {
      ++fails;
      REQUIRE(c.contains("counterexample"));
      CHECK(c["counterexample"].contains("indices"));
      CHECK(c["counterexample"]["residual"].is_array());
    } else {
      CHECK_FALSE(c.contains("counterexample"));
    }
  }
  CHECK(doc["summary"]["fail"] == fails);
  CHECK(doc["summary"]["pass"].get<std::size_t>() + fails == doc["cases"].size());

  const std::string stripped = trijac::strip_clock_fields(doc.dump());
  CHECK(stripped.find("timestamp") == std::string::npos);
  CHECK(stripped.find("elapsed_ms") == std::string::npos);
}

TEST_CASE("params are exact rational strings") {
  SuiteConfig cfg = small("theorem18");
  cfg.window = 4;
  const auto doc = nlohmann::json::parse(json_of(cfg));
  for (const auto& c : doc["cases"]) {
    for (const auto& [name, value] : c["params"].items()) {
      CHECK(trijac::to_string(trijac::parse_rational(value.get<std::string>())) == value);
    }
  }
}

TEST_CASE("every suite passes on small runs, except the q -> 1 tolerance") {
  for (const auto& name : trijac::suite_names()) {
    CAPTURE(name);
    SuiteConfig cfg = small(name);
    const auto rep = trijac::run_suite(cfg);
    CHECK(rep.suite == name);
    CHECK_FALSE(rep.cases.empty());
    for (const auto& c : rep.cases) {
      CAPTURE(c.case_id);
      CHECK(c.case_id.rfind(name + "/", 0) == 0);
      CHECK(c.counterexample.has_value() == (c.status == trijac::Status::Fail));
      if (name != "aw_limit") CHECK(c.passed());
    }
  }
}

TEST_CASE("the longer q schedule meets the tolerance") {
  SuiteConfig cfg = small("aw_limit");
  cfg.limit_max_step = 22;
  const auto rep = trijac::run_suite(cfg);
  CHECK(rep.count(trijac::Status::Fail) == 0);
}

TEST_CASE("the L/M suite forces the expanded branch every fifth draw") {
  SuiteConfig cfg = small("theorem18");
  cfg.samples = 10;
  const auto rep = trijac::run_suite(cfg);
  std::set<std::string> hit_draws;
  for (const auto& c : rep.cases) {
    if (c.notes.empty()) continue;
    hit_draws.insert(trijac::to_string(c.params[0].second) + "," + trijac::to_string(c.params[1].second));
  }
  CHECK(hit_draws.size() >= 2);
}

TEST_CASE("all runs every suite") {
  SuiteConfig cfg;
  cfg.suite = "all";
  cfg.samples = 1;
  cfg.n_max = 4;
  const auto rep = trijac::run_suite(cfg);
  CHECK(rep.suite == "all");
  std::set<std::string> seen;
  for (const auto& c : rep.cases) seen.insert(c.case_id.substr(0, c.case_id.find('/')));
  CHECK(seen == std::set<std::string>(trijac::suite_names().begin(), trijac::suite_names().end()));
}

TEST_CASE("redraw cap") {
  SuiteConfig cfg = small("aw_connection");
  cfg.bound = 1;
  std::vector<std::string> log;
  CHECK_THROWS_AS(trijac::run_suite(cfg, &log), trijac::RedrawLimit);
  CHECK(log.size() > 2000);

  SuiteConfig conv = small("convolution");
  std::vector<std::string> conv_log;
  const auto rep = trijac::run_suite(conv, &conv_log);
  CHECK(rep.rejected_draws == conv_log.size());
}

TEST_CASE("text report") {
  SuiteConfig cfg = small("koekoek");
  const std::string text = trijac::report_to_text(trijac::run_suite(cfg), 5);
  CHECK(text.rfind("suite koekoek\n", 0) == 0);
  CHECK(text.find("PASS    koekoek/AB") != std::string::npos);
  CHECK(text.find("fail 0") != std::string::npos);
}
