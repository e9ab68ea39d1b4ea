#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace graddam {

/// Parameters of the isotropic damage law with linear softening.
struct MaterialParams {
  double youngs_modulus = 0.0;  // E, MPa
  double kappa0 = 0.0;          // strain at which damage starts
  double kappa_c = 0.0;         // strain at which omega reaches 1
  double length_scale = 0.0;    // c, mm; c = 0 recovers the local model

  void validate() const;  // E > 0, 0 < kappa0 < kappa_c, c >= 0
};

/// Damage variable omega(kappa) in [0, 1].
///
/// Zero up to kappa0, one beyond kappa_c, and in between the branch that
/// produces a linear softening stress response in a uniaxial test:
///   omega = 1 - kappa0 (kappa_c - kappa) / (kappa (kappa_c - kappa0)).
double damage(const MaterialParams& params, double kappa);

/// d omega / d kappa. Zero on the flat branches; at the kinks kappa0 and
/// kappa_c the flat-branch value (0) is returned.
double damage_derivative(const MaterialParams& params, double kappa);

struct HistoryUpdate {
  double kappa;  // max(kappa_committed, eps_bar_trial)
  bool loading;  // eps_bar_trial > kappa_committed
};

/// Kuhn-Tucker update of the history parameter: kappa never decreases and
/// grows only when the trial nonlocal strain exceeds it.
HistoryUpdate update_history(double kappa_committed, double eps_bar_trial);

/// sigma = (1 - omega) E strain.
double stress(double strain, double omega, double youngs_modulus);

/// Local equivalent strain. In one dimension this is the strain itself.
inline double equivalent_strain(double strain) { return strain; }
inline double equivalent_strain_derivative() { return 1.0; }

/// Per-element history parameter with commit-at-step-end semantics.
///
/// Kernels read the committed values and form trial states on the fly;
/// commit() advances the committed state once a load step has converged.
class DamageHistory {
 public:
  explicit DamageHistory(std::size_t n_elements, double kappa_initial = 0.0);

  std::size_t size() const { return committed_.size(); }
  double committed(std::size_t element) const { return committed_.at(element); }
  const std::vector<double>& committed_values() const { return committed_; }

  void commit(std::span<const double> eps_bar_trial);

 private:
  std::vector<double> committed_;
};

}  // namespace graddam
