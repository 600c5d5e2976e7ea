#pragma once

// Command-line front end: verification suites, experiments and cache management.

#include <ostream>
#include <string>
#include <vector>

namespace symsq::cli {

inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

/// Parses and runs one command. The JSON report goes to --json or, failing that, to out;
/// the summary line and diagnostics go to err.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Same, with args excluding the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symsq::cli
