#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <span>
#include <vector>

#include "graddam1d/material.hpp"
#include "graddam1d/mesh.hpp"

namespace graddam {

/// Numbering of the mixed unknowns: one displacement per node followed by
/// one eps_bar unknown per element. Indices are dense in [0, total_dofs).
class DofMap {
 public:
  explicit DofMap(const Mesh1D& mesh)
      : n_nodes_(mesh.n_nodes()), n_elements_(mesh.n_elements()) {}
  DofMap(int n_nodes, int n_elements)
      : n_nodes_(n_nodes), n_elements_(n_elements) {}

  int displacement_dof(int node) const { return node; }
  int eps_bar_dof(int element) const { return n_nodes_ + element; }
  int total_dofs() const { return n_nodes_ + n_elements_; }

  int n_nodes() const { return n_nodes_; }
  int n_elements() const { return n_elements_; }
  bool is_eps_bar_dof(int dof) const { return dof >= n_nodes_; }

 private:
  int n_nodes_;
  int n_elements_;
};

/// Nodal displacements and element nonlocal strains.
struct FieldState {
  Eigen::VectorXd u;        // size n_nodes, mm
  Eigen::VectorXd eps_bar;  // size n_elements

  static FieldState zero(const Mesh1D& mesh);
  Eigen::VectorXd packed(const DofMap& dofs) const;
  void add_packed_increment(const DofMap& dofs, const Eigen::VectorXd& dx);
};

/// Assembled residual and consistent tangent. The tangent is nonsymmetric
/// (k_ueps and k_epsu are not transposes of each other) and couples each
/// element's eps_bar unknown to its own and both neighbours' displacements.
struct GlobalSystem {
  Eigen::VectorXd residual;
  Eigen::SparseMatrix<double> tangent;
};

/// Loop over elements, then over interior interfaces, summing kernel
/// contributions. History enters through the committed kappa per element;
/// the trial state is formed inside the kernels.
GlobalSystem assemble(const Mesh1D& mesh, const FieldState& fields,
                      const DamageHistory& history,
                      const MaterialParams& params);

struct DirichletBc {
  int dof;
  double value;  // target value of the unknown, not an increment
};

/// System after row/column elimination of the constrained unknowns.
///
/// Solving matrix * dx_f = rhs and re-inserting constrained_increment
/// yields a full increment that honours the prescribed targets exactly.
/// The pre-elimination residual rows of the constrained unknowns carry the
/// reactions and are kept in GlobalSystem::residual.
struct ReducedSystem {
  Eigen::SparseMatrix<double> matrix;
  Eigen::VectorXd rhs;                     // -(r_f + K_fc * dx_c)
  std::vector<int> free_dofs;              // reduced index -> global dof
  Eigen::VectorXd constrained_increment;   // full size; zero on free dofs
};

ReducedSystem apply_dirichlet(const GlobalSystem& system,
                              std::span<const DirichletBc> prescribed,
                              const Eigen::VectorXd& current_packed);

/// Sparse LU solve of the reduced system (no symmetry assumed). Returns a
/// full-size increment including the constrained entries.
Eigen::VectorXd solve_increment(const ReducedSystem& reduced);

/// Solve the (linear) eps_bar equations of the assembled system for a given
/// displacement field. Used to cross-validate the interface kernels against
/// the finite-difference identities.
Eigen::VectorXd solve_eps_bar_given_u(const Mesh1D& mesh,
                                      const Eigen::VectorXd& u,
                                      const MaterialParams& params);

}  // namespace graddam
