#include "graddam1d/material.hpp"

#include <algorithm>
#include <stdexcept>

namespace graddam {

void MaterialParams::validate() const {
  if (!(youngs_modulus > 0.0)) {
    throw std::invalid_argument("MaterialParams: E must be positive");
  }
  if (!(kappa0 > 0.0) || !(kappa0 < kappa_c)) {
    throw std::invalid_argument("MaterialParams: require 0 < kappa0 < kappa_c");
  }
  if (length_scale < 0.0) {
    throw std::invalid_argument("MaterialParams: c must be non-negative");
  }
}

double damage(const MaterialParams& params, double kappa) {
  if (kappa < 0.0) {
    throw std::domain_error("damage: kappa must be non-negative");
  }
  if (kappa <= params.kappa0) {
    return 0.0;
  }
  if (kappa >= params.kappa_c) {
    return 1.0;
  }
  const double omega = 1.0 - params.kappa0 * (params.kappa_c - kappa) /
                                 (kappa * (params.kappa_c - params.kappa0));
  return std::clamp(omega, 0.0, 1.0);
}

double damage_derivative(const MaterialParams& params, double kappa) {
  if (kappa < 0.0) {
    throw std::domain_error("damage_derivative: kappa must be non-negative");
  }
  if (kappa <= params.kappa0 || kappa >= params.kappa_c) {
    return 0.0;
  }
  return params.kappa0 * params.kappa_c /
         (kappa * kappa * (params.kappa_c - params.kappa0));
}

HistoryUpdate update_history(double kappa_committed, double eps_bar_trial) {
  return HistoryUpdate{std::max(kappa_committed, eps_bar_trial),
                       eps_bar_trial > kappa_committed};
}

double stress(double strain, double omega, double youngs_modulus) {
  if (omega < 0.0 || omega > 1.0) {
    throw std::domain_error("stress: omega must lie in [0, 1]");
  }
  return (1.0 - omega) * youngs_modulus * strain;
}

DamageHistory::DamageHistory(std::size_t n_elements, double kappa_initial)
    : committed_(n_elements, kappa_initial) {
  if (kappa_initial < 0.0) {
    throw std::invalid_argument("DamageHistory: initial kappa must be >= 0");
  }
}

void DamageHistory::commit(std::span<const double> eps_bar_trial) {
  if (eps_bar_trial.size() != committed_.size()) {
    throw std::invalid_argument("DamageHistory::commit: size mismatch");
  }
  for (std::size_t e = 0; e < committed_.size(); ++e) {
    committed_[e] = update_history(committed_[e], eps_bar_trial[e]).kappa;
  }
}

}  // namespace graddam
