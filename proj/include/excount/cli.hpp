// Command-line surface.  Parses argv-style arguments, runs one subcommand,
// and writes results to the given streams.  Exit codes: 0 success or all
// checks passing, 1 a verification check failed, 2 usage or input errors.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace excount {

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace excount
