#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qs3::cli {

// Runs the command line given in natural order (no program name).
// Exit codes: 0 verified / computed / not-a-product, 1 a check failed or the
// obstruction is inconclusive, 2 usage or I/O error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qs3::cli
