#pragma once

// The acceptance suite: fourteen named identity checks, each comparing two or
// more independent computation paths.

#include <cstdint>
#include <string>
#include <vector>

#include "fqcalc/constants.hpp"
#include "fqcalc/field.hpp"

namespace fqcalc {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyConfig {
  /// Agreement target x^precision for series identities, which are computed kGuard coefficients deeper.
  std::int64_t precision = 40;
  std::uint64_t seed = 7;
  Budget budget{};
};

inline constexpr int kCriteria = 14;

/// "01-gamma-factorial", "02-basis-dual-path", ...; id in 1 .. kCriteria.
std::string criterion_name(int id);
/// The q values each criterion is stated for.
std::vector<unsigned> criterion_fields(int id);

CheckResult run_criterion(int id, const FieldPtr& field, const VerifyConfig& cfg);
/// Every criterion on one field, sorted by name.
std::vector<CheckResult> run_all(const FieldPtr& field, const VerifyConfig& cfg);

/// One criterion over every q it is stated for; passes only if all do.
CheckResult run_criterion_grid(int id, const VerifyConfig& cfg);
/// The whole suite on its stated grid, sorted by name.
std::vector<CheckResult> run_suite(const VerifyConfig& cfg);

}  // namespace fqcalc
