#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ksi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `ksi` command. `args` excludes the program name. Machine-readable
/// output goes to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Experiment ids accepted by `ksi reproduce`.
const std::vector<std::string>& reproduce_ids();

}  // namespace ksi::cli
