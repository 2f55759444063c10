#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace huffseq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitArgument = 2;
inline constexpr int kExitDomain = 3;

/// Runs one command line (without the program name). JSON documents go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace huffseq::cli
