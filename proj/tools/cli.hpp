#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seqcong::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. Output is
/// deterministic: identical arguments and stdin give identical bytes.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace seqcong::cli
