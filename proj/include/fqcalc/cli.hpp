#pragma once

// The fqcalc command line: constants, basis, expand, apply, recover,
// integrate, carlitz and verify.
//
// Exit codes: 0 on success, 1 when `verify` reports a failing check, 2 on a
// bad command line or an input the library rejects.

#include <ostream>
#include <string>
#include <vector>

namespace fqcalc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitConfig = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fqcalc::cli
