// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "graddam1d/assembly.hpp"
#include "graddam1d/config.hpp"
#include "graddam1d/fd_oracle.hpp"
#include "graddam1d/material.hpp"
#include "graddam1d/mesh.hpp"
#include "graddam1d/solver.hpp"

using namespace graddam;

namespace {

struct CriterionResult {
  bool pass = false;
  std::string detail;
};

// ---------------------------------------------------------------------------
// Shared benchmark runs (reused across criteria 4-8).
// ---------------------------------------------------------------------------

struct BenchmarkRun {
  Mesh1D mesh;
  SimulationResult result;
};

BenchmarkRun run_preset(const std::string& name, int n_elements) {
  RunConfig config = preset(name);
  config.n_elements = n_elements;
  Mesh1D mesh = config.build_mesh();
  SimulationResult result =
      run_simulation(mesh, config.material, config.solver);
  return BenchmarkRun{std::move(mesh), std::move(result)};
}

int peak_step_index(const std::vector<LoadStepRecord>& records) {
  int best = 0;
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].reaction > records[best].reaction) {
      best = static_cast<int>(i);
    }
  }
  return best;
}

// Piecewise-linear interpolation of per-element values between centroids,
// constant beyond the first/last centroid.
double interpolate_profile(const Mesh1D& mesh, const Eigen::VectorXd& values,
                           double x) {
  const int n = mesh.n_elements();
  if (x <= mesh.element_centroid(0)) return values[0];
  if (x >= mesh.element_centroid(n - 1)) return values[n - 1];
  for (int e = 0; e + 1 < n; ++e) {
    const double x0 = mesh.element_centroid(e);
    const double x1 = mesh.element_centroid(e + 1);
    if (x <= x1) {
      const double t = (x - x0) / (x1 - x0);
      return (1.0 - t) * values[e] + t * values[e + 1];
    }
  }
  return values[n - 1];
}

std::string format(const char* fmt, ...) {
  char buffer[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buffer, sizeof(buffer), fmt, args);
  va_end(args);
  return buffer;
}

// ---------------------------------------------------------------------------
// Criterion 1: equivalence with the finite-difference identity.
// ---------------------------------------------------------------------------

CriterionResult criterion_fd_equivalence() {
  const EquivalenceReport report = check_fd_equivalence(120, 20240811);
  CriterionResult r;
  r.pass = report.max_deviation <= 1e-12;
  r.detail = format("max relative deviation %.3e over %d random fields "
                    "(tolerance 1e-12)",
                    report.max_deviation, report.trials);
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 2: consistent tangent vs central differences.
// ---------------------------------------------------------------------------

CriterionResult criterion_consistent_tangent() {
  std::mt19937_64 rng(97);
  std::uniform_int_distribution<int> n_dist(8, 24);
  std::uniform_real_distribution<double> strain_dist(4e-4, 5e-3);
  std::uniform_real_distribution<double> frac(0.4, 0.7);
  const double c_values[3] = {0.0, 0.5, 1.0};

  double worst = 0.0;
  const int n_states = 24;
  for (int state = 0; state < n_states; ++state) {
    const int n = n_dist(rng);
    AreaProfile profile;
    if (state % 2 == 0) {
      profile.kind = AreaProfile::Kind::LinearTaper;
      profile.end_area = 1.0;
      profile.center_area = 0.8;
    }
    const Mesh1D mesh = build_uniform_mesh(static_cast<double>(n), n, profile);
    MaterialParams params;
    params.youngs_modulus = 2e4;
    params.kappa0 = 1e-4;
    params.kappa_c = 0.0125;
    params.length_scale = c_values[state % 3];

    const DofMap dofs(mesh);
    FieldState fields = FieldState::zero(mesh);
    std::vector<double> kappa(n);
    for (int e = 0; e < n; ++e) {
      const double strain = strain_dist(rng);
      fields.u[e + 1] = fields.u[e] + strain * mesh.element_length(e);
      fields.eps_bar[e] = strain_dist(rng);
      kappa[e] = frac(rng) * fields.eps_bar[e];
    }
    DamageHistory history(n);
    history.commit(kappa);

    const Eigen::MatrixXd analytic =
        Eigen::MatrixXd(assemble(mesh, fields, history, params).tangent);

    const Eigen::VectorXd x0 = fields.packed(dofs);
    for (int j = 0; j < dofs.total_dofs(); ++j) {
      // The residual is exactly linear in u (damage responds to eps_bar
      // only), so u columns take a large step that keeps roundoff below
      // the 1e-12 floor; eps_bar columns need a small step for the
      // nonlinear softening branch.
      const double rel_step = dofs.is_eps_bar_dof(j) ? 6e-6 : 1e-3;
      const double delta = rel_step * std::max(std::abs(x0[j]), 1e-3);
      FieldState up = fields, um = fields;
      Eigen::VectorXd dx = Eigen::VectorXd::Zero(dofs.total_dofs());
      dx[j] = delta;
      up.add_packed_increment(dofs, dx);
      um.add_packed_increment(dofs, -dx);
      const Eigen::VectorXd col =
          (assemble(mesh, up, history, params).residual -
           assemble(mesh, um, history, params).residual) /
          (2.0 * delta);
      for (int i = 0; i < dofs.total_dofs(); ++i) {
        const double mag = std::max(std::abs(analytic(i, j)), std::abs(col[i]));
        if (mag <= 1e-12) continue;  // absolute floor
        worst = std::max(worst, std::abs(analytic(i, j) - col[i]) / mag);
      }
    }
  }

  CriterionResult r;
  r.pass = worst <= 1e-6;
  r.detail = format("max per-entry relative error %.3e over %d random "
                    "loading states (tolerance 1e-6)",
                    worst, n_states);
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 3: elastic analytic oracle.
// ---------------------------------------------------------------------------

CriterionResult criterion_elastic_oracle() {
  const Mesh1D mesh = build_uniform_mesh(100.0, 100, AreaProfile{});
  MaterialParams params;
  params.youngs_modulus = 2e4;
  params.kappa0 = 1e-4;
  params.kappa_c = 0.0125;
  params.length_scale = 1.0;

  SolverConfig config;
  config.n_steps = 5;
  config.end_displacement = 0.008;  // below kappa0 * L = 0.01
  config.newton_tol = 1e-8;
  config.max_iters = 10;

  const SimulationResult result = run_simulation(mesh, params, config);

  CriterionResult r;
  if (!result.completed) {
    r.detail = "elastic run did not complete: " + result.failure_message;
    return r;
  }

  double worst_reaction = 0.0;
  double worst_eps_bar = 0.0;
  double worst_omega = 0.0;
  for (const LoadStepRecord& rec : result.records) {
    const double u = rec.applied_displacement;
    const double exact = 2e4 * 1.0 * u / 100.0;
    worst_reaction =
        std::max(worst_reaction, std::abs(rec.reaction - exact) / exact);
    worst_omega = std::max(worst_omega, rec.omega.maxCoeff());
    for (int e = 0; e < mesh.n_elements(); ++e) {
      worst_eps_bar = std::max(
          worst_eps_bar, std::abs(rec.eps_bar[e] - u / 100.0) / (u / 100.0));
    }
  }

  r.pass = worst_reaction <= 1e-10 && worst_omega == 0.0 &&
           worst_eps_bar <= 1e-12;
  r.detail = format("reaction error %.2e (tol 1e-10), eps_bar error %.2e "
                    "(tol 1e-12), omega_max %.1e (must be 0)",
                    worst_reaction, worst_eps_bar, worst_omega);
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 4: local limit c = 0.
// ---------------------------------------------------------------------------

CriterionResult criterion_local_limit(const BenchmarkRun& local100) {
  CriterionResult r;
  double worst = 0.0;
  for (const LoadStepRecord& rec : local100.result.records) {
    for (int e = 0; e < local100.mesh.n_elements(); ++e) {
      const Element& el = local100.mesh.element(e);
      const double strain = (rec.u[el.right_node] - rec.u[el.left_node]) /
                            local100.mesh.element_length(e);
      worst = std::max(worst, std::abs(rec.eps_bar[e] - strain) /
                                  std::max(1.0, std::abs(strain)));
    }
  }
  r.pass = !local100.result.records.empty() && worst <= 1e-12;
  r.detail = format("max |eps_bar - strain| %.3e over %zu converged steps "
                    "(tolerance 1e-12)",
                    worst, local100.result.records.size());
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 5: mesh objectivity of the load-displacement response.
// ---------------------------------------------------------------------------

struct ObjectivityStats {
  double max_peak_diff = 0.0;
  double max_post_diff = 0.0;
  bool post_comparable = false;
  int comparison_step = -1;
};

ObjectivityStats compare_meshes(const std::vector<const BenchmarkRun*>& runs,
                                int comparison_step) {
  ObjectivityStats stats;
  stats.comparison_step = comparison_step;

  std::vector<double> peaks;
  for (const BenchmarkRun* run : runs) {
    peaks.push_back(
        run->result.records[peak_step_index(run->result.records)].reaction);
  }
  for (std::size_t i = 0; i + 1 < peaks.size(); ++i) {
    stats.max_peak_diff = std::max(
        stats.max_peak_diff, std::abs(peaks[i + 1] - peaks[i]) / peaks[i]);
  }

  stats.post_comparable = true;
  for (const BenchmarkRun* run : runs) {
    if (static_cast<int>(run->result.records.size()) < comparison_step) {
      stats.post_comparable = false;
    }
  }
  if (stats.post_comparable) {
    std::vector<double> reactions;
    for (const BenchmarkRun* run : runs) {
      reactions.push_back(run->result.records[comparison_step - 1].reaction);
    }
    for (std::size_t i = 0; i + 1 < reactions.size(); ++i) {
      stats.max_post_diff =
          std::max(stats.max_post_diff,
                   std::abs(reactions[i + 1] - reactions[i]) /
                       std::max(std::abs(reactions[i]), 1e-12));
    }
  }
  return stats;
}

CriterionResult criterion_mesh_objectivity(
    const std::vector<const BenchmarkRun*>& regularized,
    const std::vector<const BenchmarkRun*>& local) {
  CriterionResult r;

  for (const BenchmarkRun* run : regularized) {
    if (!run->result.completed) {
      r.detail = "regularized run did not complete: " +
                 run->result.failure_message;
      return r;
    }
  }

  // Comparison displacement: halfway between the latest peak and the end of
  // the schedule; must be post-peak for every regularized mesh.
  const int n_steps =
      static_cast<int>(regularized.front()->result.records.size());
  int latest_peak = 0;
  for (const BenchmarkRun* run : regularized) {
    latest_peak = std::max(latest_peak, peak_step_index(run->result.records));
  }
  const int comparison_step = (latest_peak + 1 + n_steps + 1) / 2;

  const ObjectivityStats reg = compare_meshes(regularized, comparison_step);
  const ObjectivityStats loc = compare_meshes(local, comparison_step);

  const bool regularized_objective =
      reg.post_comparable && reg.max_peak_diff < 0.01 &&
      reg.max_post_diff < 0.02 && comparison_step > latest_peak + 1;
  // The local model must violate at least one of the two bounds (or fail to
  // reach the comparison displacement on some mesh at all).
  const bool local_pathological =
      !loc.post_comparable || loc.max_peak_diff >= 0.01 ||
      loc.max_post_diff >= 0.02;

  r.pass = regularized_objective && local_pathological;
  r.detail = format(
      "c=1: peak diff %.3f%% (<1%%), post-peak diff %.3f%% (<2%%) at step %d; "
      "c=0: peak diff %.3f%%, post-peak %s",
      100.0 * reg.max_peak_diff, 100.0 * reg.max_post_diff, comparison_step,
      100.0 * loc.max_peak_diff,
      loc.post_comparable ? format("diff %.1f%%", 100.0 * loc.max_post_diff).c_str()
                          : "not reachable on every mesh (runs stop early)");
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 6: mesh objectivity of the damage profile.
// ---------------------------------------------------------------------------

CriterionResult criterion_damage_profile(
    const std::vector<const BenchmarkRun*>& regularized) {
  CriterionResult r;
  for (const BenchmarkRun* run : regularized) {
    if (!run->result.completed) {
      r.detail = "regularized run did not complete";
      return r;
    }
  }

  const double length = regularized.front()->mesh.length();
  const int samples = 2001;
  double worst = 0.0;
  for (std::size_t a = 0; a < regularized.size(); ++a) {
    for (std::size_t b = a + 1; b < regularized.size(); ++b) {
      const auto& run_a = *regularized[a];
      const auto& run_b = *regularized[b];
      for (int s = 0; s < samples; ++s) {
        const double x = length * s / (samples - 1);
        const double wa = interpolate_profile(
            run_a.mesh, run_a.result.records.back().omega, x);
        const double wb = interpolate_profile(
            run_b.mesh, run_b.result.records.back().omega, x);
        worst = std::max(worst, std::abs(wa - wb));
      }
    }
  }

  r.pass = worst <= 0.02;
  r.detail = format("max |delta omega| %.4f between final damage profiles "
                    "of the three meshes (tolerance 0.02)",
                    worst);
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 7: localization inside the narrow section.
// ---------------------------------------------------------------------------

CriterionResult criterion_localization(const BenchmarkRun& narrow) {
  CriterionResult r;
  if (!narrow.result.completed) {
    r.detail = "narrow run did not complete: " + narrow.result.failure_message;
    return r;
  }

  const RunConfig config = preset("narrow");
  const double length = config.geometry.length;
  const double half_span = 0.5 * config.geometry.profile.narrow_span;
  const double lo = 0.5 * length - half_span;
  const double hi = 0.5 * length + half_span;

  const int peak = peak_step_index(narrow.result.records);
  int checked = 0;
  bool all_inside = true;
  double worst_x = -1.0;
  for (std::size_t i = peak + 1; i < narrow.result.records.size(); ++i) {
    const LoadStepRecord& rec = narrow.result.records[i];
    int argmax = 0;
    for (int e = 1; e < narrow.mesh.n_elements(); ++e) {
      if (rec.omega[e] > rec.omega[argmax]) argmax = e;
    }
    const double x = narrow.mesh.element_centroid(argmax);
    if (x < lo || x > hi) {
      all_inside = false;
      worst_x = x;
    }
    ++checked;
  }

  r.pass = all_inside && checked > 0;
  if (all_inside) {
    r.detail = format("max-damage element inside [%.1f, %.1f] mm at all %d "
                      "post-peak steps",
                      lo, hi, checked);
  } else {
    r.detail = format("max-damage element left the narrow span (x = %.2f mm)",
                      worst_x);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 8: Kuhn-Tucker conditions over a full run.
// ---------------------------------------------------------------------------

CriterionResult criterion_kuhn_tucker(const BenchmarkRun& run) {
  CriterionResult r;
  if (run.result.records.empty()) {
    r.detail = "no converged records";
    return r;
  }

  const int n = run.mesh.n_elements();
  Eigen::VectorXd previous = Eigen::VectorXd::Zero(n);
  bool monotone = true;
  double worst_f = -1.0;
  double worst_equality = 0.0;
  for (const LoadStepRecord& rec : run.result.records) {
    for (int e = 0; e < n; ++e) {
      if (rec.kappa[e] < previous[e]) monotone = false;
      worst_f = std::max(worst_f, rec.eps_bar[e] - rec.kappa[e]);
      if (rec.kappa[e] > previous[e]) {
        worst_equality =
            std::max(worst_equality, std::abs(rec.kappa[e] - rec.eps_bar[e]));
      }
    }
    previous = rec.kappa;
  }

  r.pass = monotone && worst_f <= 1e-10 && worst_equality <= 1e-14;
  r.detail = format("kappa non-decreasing: %s; max(eps_bar - kappa) %.2e "
                    "(tol 1e-10); max |kappa - eps_bar| on loading %.2e",
                    monotone ? "yes" : "NO", worst_f, worst_equality);
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 9: benchmark-curve substitution statement.
// ---------------------------------------------------------------------------

CriterionResult criterion_substitution() {
  CriterionResult r;
  r.pass = true;
  r.detail =
      "external reference curves are not tabulated; replaced by the "
      "self-consistency and localization checks of criteria 5-7";
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<CriterionResult()> run;
  };

  // Benchmark runs shared by criteria 4-8.
  std::printf("running benchmark simulations...\n");
  const BenchmarkRun reg100 = run_preset("tapered", 100);
  const BenchmarkRun reg200 = run_preset("tapered", 200);
  const BenchmarkRun reg400 = run_preset("tapered", 400);
  const BenchmarkRun loc100 = run_preset("local_tapered", 100);
  const BenchmarkRun loc200 = run_preset("local_tapered", 200);
  const BenchmarkRun loc400 = run_preset("local_tapered", 400);
  const BenchmarkRun narrow = run_preset("narrow", 100);

  const std::vector<const BenchmarkRun*> regularized = {&reg100, &reg200,
                                                        &reg400};
  const std::vector<const BenchmarkRun*> local = {&loc100, &loc200, &loc400};

  const std::vector<Criterion> criteria = {
      {1, "FD-oracle equivalence", criterion_fd_equivalence},
      {2, "consistent tangent", criterion_consistent_tangent},
      {3, "elastic analytic oracle", criterion_elastic_oracle},
      {4, "local limit (c = 0)",
       [&] { return criterion_local_limit(loc100); }},
      {5, "mesh objectivity of the response",
       [&] { return criterion_mesh_objectivity(regularized, local); }},
      {6, "mesh objectivity of the damage profile",
       [&] { return criterion_damage_profile(regularized); }},
      {7, "localization in the narrow section",
       [&] { return criterion_localization(narrow); }},
      {8, "Kuhn-Tucker history conditions",
       [&] { return criterion_kuhn_tucker(reg100); }},
      {9, "benchmark-curve substitution", criterion_substitution},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    CriterionResult result;
    try {
      result = criterion.run();
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = std::string("exception: ") + e.what();
    }
    if (!result.pass) ++failures;
    std::printf("criterion %d [%s] %s: %s\n", criterion.id,
                result.pass ? "PASS" : "FAIL", criterion.name,
                result.detail.c_str());
  }

  if (failures == 0) {
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
