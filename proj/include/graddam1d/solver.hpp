#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "graddam1d/assembly.hpp"
#include "graddam1d/material.hpp"
#include "graddam1d/mesh.hpp"

namespace graddam {

struct SolverConfig {
  int n_steps = 200;
  double end_displacement = 0.0;  // mm, prescribed at the right end
  double newton_tol = 1e-8;       // relative to the first residual of a step
  int max_iters = 25;
  double absolute_tol = 1e-12;    // floor for the scaled residual norm
  int max_halvings = 4;           // increment subdivision on step failure

  void validate() const;
};

/// Converged state of one load increment.
struct LoadStepRecord {
  int step = 0;                  // 1-based
  double applied_displacement = 0.0;  // mm
  double reaction = 0.0;              // N, at the loaded end
  Eigen::VectorXd u;
  Eigen::VectorXd eps_bar;
  Eigen::VectorXd kappa;
  Eigen::VectorXd omega;
  int iterations = 0;
};

struct SimulationResult {
  std::vector<LoadStepRecord> records;
  bool completed = false;
  std::string failure_message;                 // empty when completed
  std::vector<double> failed_residual_history; // diagnostics of a failed step
};

struct NewtonReport {
  bool converged = false;
  bool diverged = false;
  int iterations = 0;                  // number of linear solves
  std::vector<double> residual_norms;  // scaled, one per evaluation
};

/// Full Newton on the coupled (u, eps_bar) system under fixed Dirichlet
/// targets. The committed history is held fixed; trial kappa and the
/// loading/unloading tangent switch are re-evaluated every iteration.
/// Convergence is measured on a combined residual norm with the eps_bar
/// block scaled by E*A_ref/L_ref to balance units against forces.
NewtonReport newton_iterate(const Mesh1D& mesh, const MaterialParams& params,
                            const SolverConfig& config, FieldState& fields,
                            const DamageHistory& history,
                            std::span<const DirichletBc> targets);

/// Displacement-controlled incremental driver: left end fixed, right end
/// pulled in equal increments. Each converged increment commits the
/// history; a failed increment is retried with up to max_halvings
/// subdivisions before the run stops.
SimulationResult run_simulation(const Mesh1D& mesh,
                                const MaterialParams& params,
                                const SolverConfig& config);

}  // namespace graddam
