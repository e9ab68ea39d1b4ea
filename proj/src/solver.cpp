#include "graddam1d/solver.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "graddam1d/element.hpp"

namespace graddam {

void SolverConfig::validate() const {
  if (n_steps < 1) {
    throw std::invalid_argument("SolverConfig: n_steps must be >= 1");
  }
  if (!(newton_tol > 0.0)) {
    throw std::invalid_argument("SolverConfig: newton_tol must be positive");
  }
  if (max_iters < 1) {
    throw std::invalid_argument("SolverConfig: max_iters must be >= 1");
  }
  if (max_halvings < 0) {
    throw std::invalid_argument("SolverConfig: max_halvings must be >= 0");
  }
}

namespace {

double mean_element_area(const Mesh1D& mesh) {
  double sum = 0.0;
  for (int e = 0; e < mesh.n_elements(); ++e) {
    sum += mesh.element(e).area;
  }
  return sum / mesh.n_elements();
}

// Combined norm of the reduced right-hand side with the eps_bar rows
// scaled to force-like units.
double scaled_norm(const ReducedSystem& reduced, const DofMap& dofs,
                   double eps_scale) {
  double sq = 0.0;
  for (std::size_t f = 0; f < reduced.free_dofs.size(); ++f) {
    const double w =
        dofs.is_eps_bar_dof(reduced.free_dofs[f]) ? eps_scale : 1.0;
    const double v = w * reduced.rhs[static_cast<Eigen::Index>(f)];
    sq += v * v;
  }
  return std::sqrt(sq);
}

}  // namespace

NewtonReport newton_iterate(const Mesh1D& mesh, const MaterialParams& params,
                            const SolverConfig& config, FieldState& fields,
                            const DamageHistory& history,
                            std::span<const DirichletBc> targets) {
  const DofMap dofs(mesh);
  const double eps_scale =
      params.youngs_modulus * mean_element_area(mesh) / mesh.length();

  NewtonReport report;
  double reference_norm = -1.0;
  int growth_streak = 0;

  for (int it = 0; it <= config.max_iters; ++it) {
    const GlobalSystem system = assemble(mesh, fields, history, params);
    const ReducedSystem reduced =
        apply_dirichlet(system, targets, fields.packed(dofs));

    const double norm = scaled_norm(reduced, dofs, eps_scale);
    report.residual_norms.push_back(norm);
    if (reference_norm < 0.0) {
      reference_norm = norm;
    }

    const double tol =
        std::max(config.newton_tol * reference_norm, config.absolute_tol);
    if (norm <= tol) {
      report.converged = true;
      report.iterations = it;
      return report;
    }
    if (it == config.max_iters) {
      break;
    }

    if (!std::isfinite(norm) || norm > 1e8 * reference_norm) {
      report.diverged = true;
      report.iterations = it;
      return report;
    }
    if (it > 0 && norm > report.residual_norms[it - 1]) {
      if (++growth_streak >= 3) {
        report.diverged = true;
        report.iterations = it;
        return report;
      }
    } else {
      growth_streak = 0;
    }

    fields.add_packed_increment(dofs, solve_increment(reduced));
  }

  report.iterations = config.max_iters;
  return report;
}

namespace {

struct StepOutcome {
  bool ok = false;
  int iterations = 0;
  std::vector<double> residual_norms;
};

// One converged equilibrium state at the given end displacement. Fields
// are updated in place; history is committed on success.
StepOutcome solve_to_target(const Mesh1D& mesh, const MaterialParams& params,
                            const SolverConfig& config, FieldState& fields,
                            DamageHistory& history, double target) {
  const DofMap dofs(mesh);
  const DirichletBc bcs[2] = {
      {dofs.displacement_dof(0), 0.0},
      {dofs.displacement_dof(mesh.n_nodes() - 1), target}};

  const NewtonReport report =
      newton_iterate(mesh, params, config, fields, history, bcs);

  StepOutcome outcome;
  outcome.iterations = report.iterations;
  outcome.residual_norms = report.residual_norms;
  outcome.ok = report.converged;
  if (outcome.ok) {
    history.commit(
        std::span<const double>(fields.eps_bar.data(), fields.eps_bar.size()));
  }
  return outcome;
}

LoadStepRecord make_record(const Mesh1D& mesh, const MaterialParams& params,
                           const FieldState& fields,
                           const DamageHistory& history, int step,
                           double target, int iterations) {
  LoadStepRecord rec;
  rec.step = step;
  rec.applied_displacement = target;
  rec.iterations = iterations;
  rec.u = fields.u;
  rec.eps_bar = fields.eps_bar;

  rec.kappa.resize(mesh.n_elements());
  rec.omega.resize(mesh.n_elements());
  for (int e = 0; e < mesh.n_elements(); ++e) {
    rec.kappa[e] = history.committed(e);
    rec.omega[e] = damage(params, rec.kappa[e]);
  }

  // Reaction at the loaded end: the internal-force residual of the
  // constrained row, evaluated at the converged state.
  const GlobalSystem system = assemble(mesh, fields, history, params);
  rec.reaction = system.residual[DofMap(mesh).displacement_dof(mesh.n_nodes() - 1)];
  return rec;
}

}  // namespace

SimulationResult run_simulation(const Mesh1D& mesh,
                                const MaterialParams& params,
                                const SolverConfig& config) {
  params.validate();
  config.validate();

  SimulationResult result;
  FieldState fields = FieldState::zero(mesh);
  DamageHistory history(mesh.n_elements());

  double reached = 0.0;
  for (int step = 1; step <= config.n_steps; ++step) {
    const double target =
        config.end_displacement * static_cast<double>(step) / config.n_steps;

    bool step_ok = false;
    int step_iterations = 0;
    std::vector<double> last_norms;

    for (int halving = 0; halving <= config.max_halvings && !step_ok;
         ++halving) {
      const int n_sub = 1 << halving;
      FieldState trial_fields = fields;
      DamageHistory trial_history = history;

      step_ok = true;
      step_iterations = 0;
      for (int sub = 1; sub <= n_sub; ++sub) {
        const double sub_target =
            reached + (target - reached) * static_cast<double>(sub) / n_sub;
        const StepOutcome outcome = solve_to_target(
            mesh, params, config, trial_fields, trial_history, sub_target);
        step_iterations += outcome.iterations;
        last_norms = outcome.residual_norms;
        if (!outcome.ok) {
          step_ok = false;
          break;
        }
      }

      if (step_ok) {
        fields = std::move(trial_fields);
        history = std::move(trial_history);
      }
    }

    if (!step_ok) {
      std::ostringstream msg;
      msg << "step " << step << " (end displacement " << target
          << " mm) failed to converge after " << config.max_halvings
          << " increment halvings";
      result.failure_message = msg.str();
      result.failed_residual_history = std::move(last_norms);
      return result;
    }

    reached = target;
    result.records.push_back(make_record(mesh, params, fields, history, step,
                                         target, step_iterations));
  }

  result.completed = true;
  return result;
}

}  // namespace graddam
