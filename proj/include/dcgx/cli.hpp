#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dcgx::cli {

/// Runs the dcgx command line given the arguments after the program
/// name.  Exit status: 0 success (offline-parsable / at least one
/// solution), 1 negative verdict (not offline-parsable, no parse,
/// transformation refused), 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dcgx::cli
