#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rowinc::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kBadInput = 2,
};

/// Runs one command line (without the program name). Reads tableaux, words
/// and paths from `in` unless --input names a file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace rowinc::cli
