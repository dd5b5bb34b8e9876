#include "trijac/report.hpp"

#include <algorithm>

namespace trijac {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
  }
  return "?";
}

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [s](const CaseResult& c) { return c.status == s; }));
}

void VerificationReport::append(VerificationReport other) {
  for (auto& c : other.cases) cases.push_back(std::move(c));
  rejected_draws += other.rejected_draws;
}

CaseResult pass_case(std::string id, std::vector<NamedRational> params) {
  CaseResult c;
  c.case_id = std::move(id);
  c.params = std::move(params);
  c.status = Status::Pass;
  return c;
}

CaseResult fail_case(std::string id, std::vector<NamedRational> params, Counterexample ce) {
  CaseResult c;
  c.case_id = std::move(id);
  c.params = std::move(params);
  c.status = Status::Fail;
  c.counterexample = std::move(ce);
  return c;
}

CaseResult check_zero(std::string id, std::vector<NamedRational> params,
                      std::vector<NamedIndex> indices, const Poly& residual) {
  if (residual.is_zero()) return pass_case(std::move(id), std::move(params));
  return fail_case(std::move(id), std::move(params), Counterexample{std::move(indices), residual});
}

CaseBuilder::CaseBuilder(std::string id, std::vector<NamedRational> params)
    : id_(std::move(id)), params_(std::move(params)) {}

bool CaseBuilder::expect_equal(const Poly& lhs, const Poly& rhs, std::vector<NamedIndex> indices) {
  if (lhs == rhs) return true;
  if (!ce_) ce_ = Counterexample{std::move(indices), lhs - rhs};
  return false;
}

bool CaseBuilder::expect_equal(const Rational& lhs, const Rational& rhs,
                               std::vector<NamedIndex> indices) {
  return expect_equal(Poly::constant(lhs), Poly::constant(rhs), std::move(indices));
}

CaseResult CaseBuilder::finish() && {
  CaseResult c = ce_ ? fail_case(std::move(id_), std::move(params_), std::move(*ce_))
                     : pass_case(std::move(id_), std::move(params_));
  c.notes = std::move(notes_);
  return c;
}

}  // namespace trijac
