#ifndef TRIJAC_REPORT_HPP
#define TRIJAC_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trijac/poly.hpp"
#include "trijac/rational.hpp"

namespace trijac {

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);

using NamedRational = std::pair<std::string, Rational>;
using NamedIndex = std::pair<std::string, long>;

/// Where an identity broke: the indices of the first failing entry and the
/// residual (left side minus right side).
struct Counterexample {
  std::vector<NamedIndex> indices;
  Poly residual;
};

struct CaseResult {
  std::string case_id;
  std::vector<NamedRational> params;
  Status status = Status::Pass;
  std::optional<Counterexample> counterexample;
  /// Free-form detail (skip reasons, convergence tables).
  std::vector<std::string> notes;

  bool passed() const { return status == Status::Pass; }
};

struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;
  std::size_t rejected_draws = 0;

  std::size_t count(Status s) const;
  bool all_passed() const { return count(Status::Fail) == 0; }
  void append(VerificationReport other);
};

/// PASS case.
CaseResult pass_case(std::string id, std::vector<NamedRational> params);
/// FAIL case with its counterexample.
CaseResult fail_case(std::string id, std::vector<NamedRational> params, Counterexample ce);

/// Builds a case from a residual check: PASS when `residual` is zero.
CaseResult check_zero(std::string id, std::vector<NamedRational> params,
                      std::vector<NamedIndex> indices, const Poly& residual);

/// Accumulates a single case over many residual checks, keeping the first
/// failure (checks are expected in increasing index order).
class CaseBuilder {
 public:
  CaseBuilder(std::string id, std::vector<NamedRational> params);

  /// Records lhs - rhs at the given indices; returns false on mismatch.
  bool expect_equal(const Poly& lhs, const Poly& rhs, std::vector<NamedIndex> indices);
  bool expect_equal(const Rational& lhs, const Rational& rhs, std::vector<NamedIndex> indices);
  void note(std::string text) { notes_.push_back(std::move(text)); }
  bool failed() const { return ce_.has_value(); }

  CaseResult finish() &&;

 private:
  std::string id_;
  std::vector<NamedRational> params_;
  std::optional<Counterexample> ce_;
  std::vector<std::string> notes_;
};

}  // namespace trijac

#endif  // TRIJAC_REPORT_HPP
