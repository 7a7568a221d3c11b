#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mixmoore::cli {

enum ExitCode : int {
  kOk = 0,
  kNotAlmostMoore = 1,
  kUsage = 2,
  kInputError = 3,
};

/// Runs one command line. `args` excludes the program name. MGF input named
/// "-" is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mixmoore::cli
