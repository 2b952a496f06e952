#pragma once

#include <string>
#include <vector>

namespace metra {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes: 0 success/certified, 1 verification found a counterexample,
/// 2 usage error, 3 internal error.
int run(const std::vector<std::string>& args);

}  // namespace metra
