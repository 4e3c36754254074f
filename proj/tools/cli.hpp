#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hb::cli {

enum ExitCode : int { kOk = 0, kValidation = 2, kNumerical = 3 };

/// Runs one command line (args excludes the program name). JSON or CSV goes
/// to out, diagnostics to err; input documents are read from `in` unless an
/// --input file is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hb::cli
