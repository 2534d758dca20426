#pragma once

#include <string>
#include <vector>

namespace fkw {

struct SelftestOptions {
  int ball_cap = 12;
  /// Debug: flips the sign of the translation in the length identity check.
  bool corrupt_sign = false;
};

enum class CheckStatus { Pass, Fail, Inconclusive };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

std::vector<CheckResult> run_selftest(const SelftestOptions& options);
const char* to_string(CheckStatus s);

}  // namespace fkw
