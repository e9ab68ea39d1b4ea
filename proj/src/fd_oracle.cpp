#include "graddam1d/fd_oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <stdexcept>

#include "graddam1d/assembly.hpp"
#include "graddam1d/material.hpp"
#include "graddam1d/mesh.hpp"

namespace graddam {

double fd_jump_at_node(std::span<const double> a, int node, double h) {
  const int n_nodes = static_cast<int>(a.size());
  if (node < 1 || node > n_nodes - 2) {
    throw std::out_of_range("fd_jump_at_node: node must be interior");
  }
  return -(a[node - 1] - 2.0 * a[node] + a[node + 1]) / (h * h);
}

namespace {

// Central second difference at a node; zero at boundary nodes.
double second_derivative(std::span<const double> a, int node, double h) {
  const int n_nodes = static_cast<int>(a.size());
  if (node <= 0 || node >= n_nodes - 1) {
    return 0.0;
  }
  return (a[node - 1] - 2.0 * a[node] + a[node + 1]) / (h * h);
}

}  // namespace

double fd_eps_bar(std::span<const double> a, int element, double c, double h) {
  const int n_elements = static_cast<int>(a.size()) - 1;
  if (element < 0 || element >= n_elements) {
    throw std::out_of_range("fd_eps_bar: invalid element index");
  }
  const int left = element;
  const int right = element + 1;
  const double eps_eq = (a[right] - a[left]) / h;
  const double correction =
      c * c / h * (second_derivative(a, right, h) - second_derivative(a, left, h));
  return eps_eq + correction;
}

EquivalenceReport check_fd_equivalence(int trials, std::uint64_t seed) {
  if (trials < 1) {
    throw std::invalid_argument("check_fd_equivalence: trials must be >= 1");
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n_dist(10, 400);
  std::uniform_real_distribution<double> c_dist(0.0, 2.0);
  std::uniform_real_distribution<double> a_dist(-1.0, 1.0);

  MaterialParams params;
  params.youngs_modulus = 2.0e4;
  params.kappa0 = 1.0e-4;
  params.kappa_c = 0.0125;

  EquivalenceReport report;
  report.trials = trials;

  for (int t = 0; t < trials; ++t) {
    const int n_elements = n_dist(rng);
    params.length_scale = c_dist(rng);

    const double length = 100.0;
    const double h = length / n_elements;
    const Mesh1D mesh = build_uniform_mesh(length, n_elements, AreaProfile{});

    Eigen::VectorXd u(n_elements + 1);
    for (int i = 0; i <= n_elements; ++i) {
      u[i] = a_dist(rng);
    }

    const Eigen::VectorXd dg = solve_eps_bar_given_u(mesh, u, params);

    Eigen::VectorXd fd(n_elements);
    const std::span<const double> a(u.data(), u.size());
    for (int e = 0; e < n_elements; ++e) {
      fd[e] = fd_eps_bar(a, e, params.length_scale, h);
    }

    const double scale = fd.cwiseAbs().maxCoeff();
    const double deviation =
        (dg - fd).cwiseAbs().maxCoeff() / std::max(scale, 1e-300);
    report.max_deviation = std::max(report.max_deviation, deviation);
  }

  return report;
}

}  // namespace graddam
