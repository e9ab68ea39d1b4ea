#include "graddam1d/element.hpp"

#include <algorithm>
#include <stdexcept>

namespace graddam {

ElementKernelOutput element_kernel(const ElementGeometry& geometry,
                                   const Eigen::Vector2d& u_local,
                                   double eps_bar, double kappa_committed,
                                   const MaterialParams& params) {
  const double h = geometry.length;
  const double area = geometry.area;
  if (!(h > 0.0) || !(area > 0.0)) {
    throw std::invalid_argument("element_kernel: degenerate element geometry");
  }

  const double youngs = params.youngs_modulus;
  const double volume = area * h;

  // Linear displacement: B = [-1/h, 1/h], strain constant on the element.
  const Eigen::RowVector2d b_row(-1.0 / h, 1.0 / h);
  const double strain = b_row * u_local;
  const double eps_eq = equivalent_strain(strain);

  const auto trial = update_history(kappa_committed, eps_bar);
  const double omega = damage(params, trial.kappa);
  const double sigma = stress(strain, omega, youngs);

  ElementKernelOutput out;
  out.strain = strain;
  out.eps_eq = eps_eq;
  out.kappa_trial = trial.kappa;
  out.omega = omega;
  out.loading = trial.loading;

  // Constant integrands; the one-point rule is exact.
  out.r_u = b_row.transpose() * (sigma * volume);
  out.r_eps = (eps_bar - eps_eq) * volume;

  const double integrity = std::max(1.0 - omega, kMinStiffnessIntegrity);
  out.k_uu = b_row.transpose() * (integrity * youngs * volume) * b_row;

  // d r_u / d eps_bar acts only through omega(kappa), which responds to
  // eps_bar on the loading branch.
  const double domega =
      trial.loading ? damage_derivative(params, trial.kappa) : 0.0;
  out.k_ueps = b_row.transpose() * (-domega * youngs * strain * volume);

  out.k_epsu = -equivalent_strain_derivative() * volume * b_row;
  out.k_epseps = volume;

  return out;
}

InterfaceKernelOutput interface_kernel(const InterfaceSideState& left,
                                       const InterfaceSideState& right,
                                       double h_avg,
                                       const MaterialParams& params) {
  if (!(h_avg > 0.0)) {
    throw std::invalid_argument("interface_kernel: h_avg must be positive");
  }

  const double normals[2] = {+1.0, -1.0};
  const InterfaceSideState sides[2] = {left, right};

  // The interface integral is a point evaluation in 1D; the cross-section
  // weight is the average of the two adjacent element areas.
  const double area_int = 0.5 * (left.area + right.area);
  const double penalty =
      params.length_scale * params.length_scale / h_avg * area_int;

  const double jump = normals[0] * equivalent_strain(left.strain) +
                      normals[1] * equivalent_strain(right.strain);

  InterfaceKernelOutput out;
  for (int j = 0; j < 2; ++j) {
    out.r_eps[j] = penalty * normals[j] * jump;
    for (int k = 0; k < 2; ++k) {
      const Eigen::RowVector2d b_k(-1.0 / sides[k].length,
                                   1.0 / sides[k].length);
      out.k_epsu[j][k] = penalty * normals[j] * normals[k] *
                         equivalent_strain_derivative() * b_k;
    }
  }
  return out;
}

}  // namespace graddam
