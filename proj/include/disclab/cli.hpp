#pragma once

#include <string>
#include <vector>

namespace disclab {

/// Dispatches one invocation; `args` excludes the program name.
/// Exit codes: 0 success, 1 usage/IO/numerical error, 2 mathematically
/// refuted (failed verification, refuted containment, failed checker pass).
int run_command(const std::vector<std::string>& args);

}  // namespace disclab
