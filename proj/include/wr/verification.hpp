#pragma once

// The acceptance suite: ten numbered end-to-end checks over the whole
// library, each with its tolerances pinned in code.  Shared by the
// `verify` CLI subcommand and the acceptance test binary.

#include <string>
#include <vector>

namespace wr {

enum class VerifyLevel { quick, full };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs every criterion; quick mode skips exact enumerations above 1e6
// states (only criterion 8's cross-check is affected).
std::vector<CriterionResult> run_acceptance(VerifyLevel level);

// True when every criterion passed.
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace wr
