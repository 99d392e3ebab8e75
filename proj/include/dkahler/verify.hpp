#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dkahler/solver.hpp"

namespace dkahler {

enum class Suite { all, clifford, calculus, projectors, decompositions, solver };

Suite parse_suite(std::string_view tag);

struct VerifyOptions {
  LatticeShape shape{{2, 2, 2, 2}};
  std::uint64_t seed = 0;
  double tol = 1e-10;
  Suite suite = Suite::all;
  int samples = 1000; // random forms for the dual-route and component checks
};

struct PropResult {
  std::string id;
  double max_residual = 0.0;
  bool pass = false;
};

/// Runs the requested suites. Results are in a fixed order for a given set
/// of options. Throws UsageError when a solution-based suite needs a
/// real-mass momentum and no spatial extent is even.
std::vector<PropResult> run_verify(const VerifyOptions &opts);

/// "PROP <id> <max_residual> <PASS|FAIL>"
std::string format_report_line(const PropResult &r);

/// Half-period momentum in the first spatial direction with even extent;
/// its Dirac-Kahler masses are real. Throws UsageError if there is none.
Momentum real_mass_momentum(const LatticeShape &shape);

} // namespace dkahler
