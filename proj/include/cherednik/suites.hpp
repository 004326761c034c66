#pragma once

#include <functional>
#include <string>
#include <vector>

namespace cherednik {

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct Check {
  std::string id;
  std::string title;
  double limit_seconds;
  /// Returns an empty string on success, a failure description otherwise.
  std::function<std::string()> body;
};

/// The acceptance criteria, C1..C10.
std::vector<Check> acceptance_checks();
/// Extra invariant sweeps run by the "full" suite.
std::vector<Check> invariant_checks();

/// Runs a check, timing it; a thrown exception or an exceeded limit is a failure.
CheckResult run_check(const Check& check);

/// "basic" = acceptance criteria; "full" = acceptance plus invariant sweeps.
/// Checks run on up to `threads` threads; results keep the suite order.
std::vector<CheckResult> run_suite(const std::string& suite, int threads = 1);

/// Thread count from CHEREDNIK_THREADS, default 1.
int threads_from_env();

}  // namespace cherednik
