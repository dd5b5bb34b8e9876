#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "trijac/harness.hpp"

namespace trijac {

namespace {

using Json = nlohmann::ordered_json;

std::string opt_string(const auto& v) { return v ? std::to_string(*v) : std::string("default"); }

Json params_json(const std::vector<NamedRational>& params) {
  Json out = Json::object();
  for (const auto& [name, value] : params) out[name] = to_string(value);
  return out;
}

Json counterexample_json(const Counterexample& ce) {
  Json indices = Json::object();
  for (const auto& [name, value] : ce.indices) indices[name] = value;
  Json residual = Json::array();
  for (const Rational& c : ce.residual.coefficients()) residual.push_back(to_string(c));
  return Json{{"indices", indices}, {"residual", residual}};
}

std::string render_params(const std::vector<NamedRational>& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ' ';
    out += name + "=" + to_string(value);
  }
  return out;
}

}  // namespace

std::map<std::string, std::string> config_echo(const SuiteConfig& cfg) {
  return {
      {"suite", cfg.suite},
      {"n_max", opt_string(cfg.n_max)},
      {"window", opt_string(cfg.window)},
      {"base_index", opt_string(cfg.base_index)},
      {"samples", opt_string(cfg.samples)},
      {"seed", std::to_string(cfg.seed)},
      {"series_order", std::to_string(cfg.series_order)},
      {"format", cfg.format},
      {"limit_ratio", to_string(cfg.limit_ratio)},
      {"limit_tol", to_string(cfg.limit_tol)},
      {"limit_max_step", std::to_string(cfg.limit_max_step)},
      {"bound", std::to_string(cfg.bound)},
  };
}

std::string report_to_json(const VerificationReport& rep, const SuiteConfig& cfg, double elapsed_ms,
                           const std::string& timestamp) {
  Json doc;
  doc["schema"] = 1;
  doc["suite"] = rep.suite;
  Json echo = Json::object();
  for (const auto& [key, value] : config_echo(cfg)) echo[key] = value;
  doc["config_echo"] = echo;

  Json cases = Json::array();
  for (const CaseResult& c : rep.cases) {
    Json entry;
    entry["case_id"] = c.case_id;
    entry["params"] = params_json(c.params);
    entry["status"] = to_string(c.status);
    if (c.counterexample) entry["counterexample"] = counterexample_json(*c.counterexample);
    if (!c.notes.empty()) entry["notes"] = c.notes;
    cases.push_back(std::move(entry));
  }
  doc["cases"] = std::move(cases);
  doc["summary"] = Json{{"pass", rep.count(Status::Pass)},
                        {"fail", rep.count(Status::Fail)},
                        {"skipped", rep.count(Status::Skipped)},
                        {"rejected", rep.rejected_draws}};
  doc["elapsed_ms"] = static_cast<long long>(elapsed_ms);
  doc["timestamp"] = timestamp;
  return doc.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& rep, double elapsed_ms) {
  std::ostringstream out;
  out << "suite " << rep.suite << "\n";
  for (const CaseResult& c : rep.cases) {
    out << std::left << std::setw(8) << to_string(c.status) << c.case_id;
    if (!c.params.empty()) out << "  " << render_params(c.params);
    out << "\n";
    if (c.counterexample) {
      out << "        at";
      for (const auto& [name, value] : c.counterexample->indices) out << ' ' << name << '=' << value;
      out << ": residual " << to_string(c.counterexample->residual) << "\n";
    }
    for (const auto& note : c.notes) out << "        " << note << "\n";
  }
  out << "pass " << rep.count(Status::Pass) << ", fail " << rep.count(Status::Fail) << ", skipped "
      << rep.count(Status::Skipped) << ", rejected draws " << rep.rejected_draws << ", "
      << static_cast<long long>(elapsed_ms) << " ms\n";
  return out.str();
}

std::string strip_clock_fields(const std::string& json_text) {
  Json doc = Json::parse(json_text);
  doc.erase("timestamp");
  doc.erase("elapsed_ms");
  return doc.dump(2) + "\n";
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

}  // namespace trijac
