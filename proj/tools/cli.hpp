#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irum::cli {

// Dispatches one subcommand; returns the process exit status. Verdicts
// (true or false alike) exit 0; input and size errors exit nonzero.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace irum::cli
