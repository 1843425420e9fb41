#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace discont::cli {

/// Runs one command line (without the program name). Exit status: 0 for
/// accept/pass, 1 for reject/fail, 2 for usage and input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace discont::cli
