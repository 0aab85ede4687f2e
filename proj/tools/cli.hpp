#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace forestry::cli {

enum Exit { kOk = 0, kCheckFailed = 1, kBadInput = 2 };

/// Runs one command line (without the program name). Forest arguments are
/// read from stdin, one per line, when none are given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace forestry::cli
