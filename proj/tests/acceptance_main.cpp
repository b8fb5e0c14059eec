// Acceptance suite runner: one pass/fail line per criterion, non-zero
// exit on any failure.  WR_ACCEPTANCE_LEVEL=quick skips the large
// enumerations.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "wr/verification.hpp"

int main() {
  const char* env = std::getenv("WR_ACCEPTANCE_LEVEL");
  const wr::VerifyLevel level = (env && std::strcmp(env, "quick") == 0)
                                    ? wr::VerifyLevel::quick
                                    : wr::VerifyLevel::full;
  const auto results = wr::run_acceptance(level);
  for (const auto& r : results)
    std::printf("[%s] criterion %2d: %s%s%s (%.2fs)\n",
                r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.empty() ? "" : " -- ", r.detail.c_str(), r.seconds);
  const bool ok = wr::all_passed(results);
  std::printf("%s\n", ok ? "ALL CRITERIA PASSED" : "VERIFICATION FAILED");
  return ok ? 0 : 1;
}
