#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace reflquot::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Exit status: 0 on success,
/// 1 when a verification report contains a failing check, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reflquot::cli
