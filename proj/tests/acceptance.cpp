#include <cstdio>
#include <iostream>

#include "cherednik/suites.hpp"

int main() {
  int failures = 0;
  for (const auto& check : cherednik::acceptance_checks()) {
    const auto r = cherednik::run_check(check);
    std::printf("[%s] %s %s (%.2fs, limit %.0fs)\n", r.passed ? "PASS" : "FAIL", r.id.c_str(), r.title.c_str(), r.seconds,
                r.limit_seconds);
    if (!r.passed) {
      std::printf("       %s\n", r.detail.c_str());
      ++failures;
    }
  }
  std::cout << (failures ? "acceptance: FAILED" : "acceptance: all criteria passed") << std::endl;
  return failures ? 1 : 0;
}
