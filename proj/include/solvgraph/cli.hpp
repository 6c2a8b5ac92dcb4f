#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace solvgraph {

enum ExitCode : int
{
  exit_ok = 0,
  exit_theorem_failure = 1,
  exit_usage = 2,
  exit_solvable_input = 3,
  exit_cap_exceeded = 4,
};

/// Entry point of the `solvgraph` tool. `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace solvgraph
