#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace wpspec::cli {

inline constexpr std::string_view kSchemaVersion = "1.0";

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 2,
  kCrossCheckFailure = 3,
};

/// Runs the `wpspec` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wpspec::cli
