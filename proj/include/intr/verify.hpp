#pragma once

// The verification suites behind `intr_cli verify` and the acceptance run.
// Each criterion is deterministic for a given seed and carries its own time
// limit; a criterion passes when every check holds within that limit.

#include <cstdint>
#include <string>
#include <vector>

namespace intr {

struct CriterionInfo {
  int id = 0;
  std::string name;
  std::string summary;
  double limit_seconds = 0;
};

// Criteria 1..9 in order.
const std::vector<CriterionInfo>& criteria();

struct CriterionResult {
  CriterionInfo info;
  bool checks_passed = false;
  double seconds = 0;
  long cases = 0;
  std::vector<std::string> counterexamples;  // first few failures
  std::string detail;

  bool within_limit() const { return seconds < info.limit_seconds; }
  bool passed() const { return checks_passed && within_limit(); }
};

CriterionResult run_criterion(int id, std::uint64_t seed);

// "all", a criterion name ("lengths", "catenary", ...) or its number.
// Throws ParseError for an unknown suite.
std::vector<int> suite_criteria(const std::string& suite);

// "PASS  1 lengths  440 cases  2.31 s (limit 60 s)"
std::string summary_line(const CriterionResult& r);

}  // namespace intr
