#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ballcarve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 when a check fails and 2
/// on usage or input errors.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace ballcarve::cli
