#include "graddam1d/assembly.hpp"

#include <Eigen/SparseLU>
#include <stdexcept>
#include <string>

#include "graddam1d/element.hpp"

namespace graddam {

FieldState FieldState::zero(const Mesh1D& mesh) {
  FieldState fields;
  fields.u = Eigen::VectorXd::Zero(mesh.n_nodes());
  fields.eps_bar = Eigen::VectorXd::Zero(mesh.n_elements());
  return fields;
}

Eigen::VectorXd FieldState::packed(const DofMap& dofs) const {
  Eigen::VectorXd x(dofs.total_dofs());
  x.head(dofs.n_nodes()) = u;
  x.tail(dofs.n_elements()) = eps_bar;
  return x;
}

void FieldState::add_packed_increment(const DofMap& dofs,
                                      const Eigen::VectorXd& dx) {
  if (dx.size() != dofs.total_dofs()) {
    throw std::invalid_argument("FieldState: increment size mismatch");
  }
  u += dx.head(dofs.n_nodes());
  eps_bar += dx.tail(dofs.n_elements());
}

namespace {

ElementGeometry element_geometry(const Mesh1D& mesh, int e) {
  return ElementGeometry{mesh.element_length(e), mesh.element(e).area};
}

double element_strain(const Mesh1D& mesh, const Eigen::VectorXd& u, int e) {
  const Element& el = mesh.element(e);
  return (u[el.right_node] - u[el.left_node]) / mesh.element_length(e);
}

}  // namespace

GlobalSystem assemble(const Mesh1D& mesh, const FieldState& fields,
                      const DamageHistory& history,
                      const MaterialParams& params) {
  const DofMap dofs(mesh);
  if (fields.u.size() != mesh.n_nodes() ||
      fields.eps_bar.size() != mesh.n_elements() ||
      static_cast<int>(history.size()) != mesh.n_elements()) {
    throw std::invalid_argument("assemble: field/history sizes do not match mesh");
  }

  GlobalSystem system;
  system.residual = Eigen::VectorXd::Zero(dofs.total_dofs());

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(9 * mesh.n_elements() + 8 * mesh.n_interfaces());

  for (int e = 0; e < mesh.n_elements(); ++e) {
    const Element& el = mesh.element(e);
    const Eigen::Vector2d u_local(fields.u[el.left_node],
                                  fields.u[el.right_node]);
    const ElementKernelOutput out =
        element_kernel(element_geometry(mesh, e), u_local, fields.eps_bar[e],
                       history.committed(e), params);

    const int udof[2] = {dofs.displacement_dof(el.left_node),
                         dofs.displacement_dof(el.right_node)};
    const int edof = dofs.eps_bar_dof(e);

    for (int i = 0; i < 2; ++i) {
      system.residual[udof[i]] += out.r_u[i];
      for (int j = 0; j < 2; ++j) {
        triplets.emplace_back(udof[i], udof[j], out.k_uu(i, j));
      }
      triplets.emplace_back(udof[i], edof, out.k_ueps[i]);
      triplets.emplace_back(edof, udof[i], out.k_epsu[i]);
    }
    system.residual[edof] += out.r_eps;
    triplets.emplace_back(edof, edof, out.k_epseps);
  }

  for (int i = 0; i < mesh.n_interfaces(); ++i) {
    const Interface& itf = mesh.interface(i);
    const int elems[2] = {itf.left_element, itf.right_element};

    InterfaceSideState sides[2];
    for (int s = 0; s < 2; ++s) {
      sides[s] = InterfaceSideState{mesh.element_length(elems[s]),
                                    mesh.element(elems[s]).area,
                                    element_strain(mesh, fields.u, elems[s])};
    }

    const InterfaceKernelOutput out = interface_kernel(
        sides[0], sides[1], interface_length_scale(mesh, i), params);

    for (int j = 0; j < 2; ++j) {
      const int edof = dofs.eps_bar_dof(elems[j]);
      system.residual[edof] += out.r_eps[j];
      for (int k = 0; k < 2; ++k) {
        const Element& ek = mesh.element(elems[k]);
        const int ukdof[2] = {dofs.displacement_dof(ek.left_node),
                              dofs.displacement_dof(ek.right_node)};
        for (int c = 0; c < 2; ++c) {
          triplets.emplace_back(edof, ukdof[c], out.k_epsu[j][k][c]);
        }
      }
    }
  }

  system.tangent.resize(dofs.total_dofs(), dofs.total_dofs());
  system.tangent.setFromTriplets(triplets.begin(), triplets.end());
  return system;
}

ReducedSystem apply_dirichlet(const GlobalSystem& system,
                              std::span<const DirichletBc> prescribed,
                              const Eigen::VectorXd& current_packed) {
  const int n = static_cast<int>(system.residual.size());
  if (current_packed.size() != n) {
    throw std::invalid_argument("apply_dirichlet: state size mismatch");
  }

  std::vector<char> constrained(n, 0);
  Eigen::VectorXd dx_c = Eigen::VectorXd::Zero(n);
  for (const DirichletBc& bc : prescribed) {
    if (bc.dof < 0 || bc.dof >= n) {
      throw std::out_of_range("apply_dirichlet: no such dof " +
                              std::to_string(bc.dof));
    }
    constrained[bc.dof] = 1;
    dx_c[bc.dof] = bc.value - current_packed[bc.dof];
  }

  ReducedSystem reduced;
  std::vector<int> global_to_free(n, -1);
  for (int dof = 0; dof < n; ++dof) {
    if (!constrained[dof]) {
      global_to_free[dof] = static_cast<int>(reduced.free_dofs.size());
      reduced.free_dofs.push_back(dof);
    }
  }
  const int n_free = static_cast<int>(reduced.free_dofs.size());

  // rhs = -(r_f + K_fc dx_c): the constrained increment is moved to the
  // right-hand side so the solved increment honours it exactly.
  Eigen::VectorXd rhs(n_free);
  for (int f = 0; f < n_free; ++f) {
    rhs[f] = -system.residual[reduced.free_dofs[f]];
  }

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(system.tangent.nonZeros());
  for (int col = 0; col < system.tangent.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(system.tangent, col);
         it; ++it) {
      const int row = static_cast<int>(it.row());
      if (constrained[row]) continue;
      const int f_row = global_to_free[row];
      if (constrained[col]) {
        rhs[f_row] -= it.value() * dx_c[col];
      } else {
        triplets.emplace_back(f_row, global_to_free[col], it.value());
      }
    }
  }

  reduced.matrix.resize(n_free, n_free);
  reduced.matrix.setFromTriplets(triplets.begin(), triplets.end());
  reduced.rhs = std::move(rhs);
  reduced.constrained_increment = std::move(dx_c);
  return reduced;
}

Eigen::VectorXd solve_increment(const ReducedSystem& reduced) {
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(reduced.matrix);
  if (lu.info() != Eigen::Success) {
    throw std::runtime_error("solve_increment: singular tangent");
  }
  const Eigen::VectorXd dx_f = lu.solve(reduced.rhs);
  if (lu.info() != Eigen::Success) {
    throw std::runtime_error("solve_increment: linear solve failed");
  }

  Eigen::VectorXd dx = reduced.constrained_increment;
  for (std::size_t f = 0; f < reduced.free_dofs.size(); ++f) {
    dx[reduced.free_dofs[f]] = dx_f[static_cast<Eigen::Index>(f)];
  }
  return dx;
}

Eigen::VectorXd solve_eps_bar_given_u(const Mesh1D& mesh,
                                      const Eigen::VectorXd& u,
                                      const MaterialParams& params) {
  const DofMap dofs(mesh);
  FieldState fields = FieldState::zero(mesh);
  fields.u = u;
  const DamageHistory history(mesh.n_elements());

  const GlobalSystem system = assemble(mesh, fields, history, params);

  // The eps_bar equations are linear with k_epseps on the diagonal and no
  // eps_bar cross-coupling, so one elimination starting from eps_bar = 0
  // is exact: eps_bar = -r_eps / V_e row by row.
  Eigen::VectorXd eps_bar(mesh.n_elements());
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const int edof = dofs.eps_bar_dof(e);
    const double diag = system.tangent.coeff(edof, edof);
    eps_bar[e] = -system.residual[edof] / diag;
  }
  return eps_bar;
}

}  // namespace graddam
