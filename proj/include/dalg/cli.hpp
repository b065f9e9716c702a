#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dalg::cli {

/// Runs one command line (without the program name). Output is written to
/// `out` only on success. Exit codes: 0 success, 1 malformed input,
/// 2 violated mathematical precondition.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace dalg::cli
