#pragma once

#include <string>

#include "graddam1d/mesh.hpp"
#include "graddam1d/solver.hpp"

namespace graddam {

/// Format a double with 17 significant digits (round-trip exact).
std::string format_double(double value);

/// step, applied_displacement_mm, reaction_N, iterations — one row per
/// converged load step.
void write_load_displacement_csv(const std::string& path,
                                 const std::vector<LoadStepRecord>& records);

/// x_mm, strain, eps_bar, kappa, omega at each element centroid for one
/// converged step.
void write_profile_csv(const std::string& path, const Mesh1D& mesh,
                       const LoadStepRecord& record);

/// Peak load, final omega_max, and completion status.
void write_run_summary(const std::string& path, const SimulationResult& result);

/// Matplotlib script that reproduces the load-displacement and damage
/// profile figures from the CSV files next to it.
void write_plot_script(const std::string& path);

}  // namespace graddam
