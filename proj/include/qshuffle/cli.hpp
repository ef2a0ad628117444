#pragma once

#include <string>
#include <vector>

namespace qshuffle::cli {

/// Executes one CLI invocation. args excludes the program name.
/// Exit codes: 0 all checks passed / output produced, 1 verification failure,
/// 2 usage error or inconclusive result.
int run(std::vector<std::string> args);

}  // namespace qshuffle::cli
