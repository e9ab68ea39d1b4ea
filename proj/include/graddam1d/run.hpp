#pragma once

#include <string>

#include "graddam1d/config.hpp"
#include "graddam1d/solver.hpp"

namespace graddam {

struct RunOutcome {
  SimulationResult result;
  std::string output_directory;
};

/// Execute a configured simulation and write the output files
/// (load_displacement.csv, profile_<step>.csv, run_summary.txt,
/// plot_results.py, and a copy of the resolved config). A run whose solver
/// stops early still writes the converged part plus a failure report.
RunOutcome execute_run(const RunConfig& config);

}  // namespace graddam
