#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace latnorm {

/// Exit codes: 0 and 1 are verdicts (see each subcommand), 2 is an input,
/// usage or precondition error, 3 a search that ran out of budget.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);
/// Same, with argv[0] supplied.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latnorm
