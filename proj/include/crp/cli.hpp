#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crp::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,     ///< bad flags, unreadable or invalid instance, output collision
  kNotConverged = 2,   ///< sweep did not converge and --strict was given
};

/// Runs one `crp` command line (args exclude the program name).
/// Diagnostics go to `err`, progress lines to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a:step:b" (inclusive) or a comma-separated list.
std::vector<double> parse_value_list(const std::string& text);

}  // namespace crp::cli
