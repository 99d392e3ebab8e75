#pragma once

#include <array>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "dkahler/equations.hpp"
#include "dkahler/solver.hpp"

namespace dkahler {

// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitNoModes = 3,
};

// "4x4x4x4"; every extent must be >= 2.
LatticeShape parse_shape(std::string_view text);
// "0,2,0,0"
Momentum parse_momentum(std::string_view text);
// "2" or "2,-0.5" (real, imaginary)
Complex parse_mass(std::string_view text);

/// Entry point of the `dkahler` tool: subcommands verify, solve, apply,
/// decompose and residual. Writes reports to `out`, diagnostics to `err`
/// and returns the process exit status.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace dkahler
