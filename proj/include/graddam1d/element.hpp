#pragma once

#include <Eigen/Dense>
#include <array>

#include "graddam1d/material.hpp"

namespace graddam {

struct ElementGeometry {
  double length;  // mm
  double area;    // mm^2
};

/// Residuals and stiffness blocks of a single two-node element with linear
/// displacement and an element-constant nonlocal strain unknown.
///
/// Residual convention: r_u is the internal nodal force vector, r_eps the
/// value of the discrete nonlocal strain equation; Newton solves
/// K dx = -r. The four blocks are the exact derivatives of (r_u, r_eps)
/// with respect to (u_local, eps_bar), with the loading/unloading switch
/// applied to k_ueps.
struct ElementKernelOutput {
  Eigen::Vector2d r_u;          // N
  double r_eps;                 // strain * mm^3

  Eigen::Matrix2d k_uu;
  Eigen::Vector2d k_ueps;       // d r_u / d eps_bar
  Eigen::RowVector2d k_epsu;    // d r_eps / d u_local
  double k_epseps;              // element volume A*h

  // Trial state, reported for the solver and for output records.
  double strain;
  double eps_eq;
  double kappa_trial;
  double omega;
  bool loading;
};

// Damage cap used in stiffness evaluation only: keeps the tangent
// invertible when omega -> 1. Residuals always use the true omega.
inline constexpr double kMinStiffnessIntegrity = 1e-9;

ElementKernelOutput element_kernel(const ElementGeometry& geometry,
                                   const Eigen::Vector2d& u_local,
                                   double eps_bar, double kappa_committed,
                                   const MaterialParams& params);

/// Element trace at an interior interface: geometry plus the constant
/// strain of the adjacent element.
struct InterfaceSideState {
  double length;  // mm
  double area;    // mm^2
  double strain;
};

/// Interface jump-penalty contributions. Index 0 is the left element,
/// 1 the right one; normals are n_left = +1, n_right = -1, so the jump of
/// a field a is [[a]] = a_left - a_right.
///
/// Only the eps_bar-equation rows receive interface terms: r_eps[j] adds
/// (c^2/h_avg) n_j [[eps_eq]] A_int, and k_epsu[j][k] is its derivative
/// with respect to element k's nodal displacements.
struct InterfaceKernelOutput {
  std::array<double, 2> r_eps;
  std::array<std::array<Eigen::RowVector2d, 2>, 2> k_epsu;  // [j][k]
};

InterfaceKernelOutput interface_kernel(const InterfaceSideState& left,
                                       const InterfaceSideState& right,
                                       double h_avg,
                                       const MaterialParams& params);

}  // namespace graddam
