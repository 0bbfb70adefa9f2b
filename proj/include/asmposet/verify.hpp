#pragma once

#include <span>
#include <string>
#include <vector>

namespace asmposet {

// One invariant check; `detail` carries the sizes covered, or the first
// counterexample on failure.
struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct VerifyOptions {
  // Caps every check at min(n_max, its stated size). Oracle-backed checks
  // (ASM enumeration comparisons) are additionally capped at 6.
  int n_max = 6;
  // Self-test hook: "alternating" swaps in a deliberately broken
  // is_alternating so the suite can be shown to catch it.
  std::string inject_fault;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opts);

bool all_passed(std::span<const CheckResult> results);

}  // namespace asmposet
