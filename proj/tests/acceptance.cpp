// One PASS/FAIL line per acceptance criterion, each over the fields it is
// stated for. Exits nonzero when any criterion fails.

#include <cstdio>

#include "fqcalc/verify.hpp"

int main() {
  fqcalc::VerifyConfig cfg;
  cfg.precision = 40;  // identities must agree to x^38 after the guard band
  cfg.seed = 7;
  int failed = 0;
  for (int id = 1; id <= fqcalc::kCriteria; ++id) {
    const fqcalc::CheckResult r = fqcalc::run_criterion_grid(id, cfg);
    std::printf("%s %s: %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
    if (!r.passed) ++failed;
  }
  std::printf("%d/%d criteria passed\n", fqcalc::kCriteria - failed, fqcalc::kCriteria);
  return failed == 0 ? 0 : 1;
}
