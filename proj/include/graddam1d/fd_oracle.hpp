#pragma once

#include <cstdint>
#include <span>

namespace graddam {

/// Finite-difference identities for linear displacement / element-constant
/// eps_bar on equally spaced nodes. Independent of the element and
/// interface kernels; used to cross-validate them.

/// Strain jump per unit length across the interface at an interior node j:
///   [[eps_eq]] / h |_j = -(a_{j-1} - 2 a_j + a_{j+1}) / h^2,
/// the negated central second difference of the nodal displacements.
double fd_jump_at_node(std::span<const double> a, int node, double h);

/// Nonlocal strain of an element on a uniform grid: the element strain plus
/// (c^2/h) times the difference of the displacement second derivatives at
/// the element's two nodes. At boundary nodes the second derivative is
/// taken as zero, matching the natural condition grad(eps_eq) . n = 0 that
/// the discrete problem applies by omitting the missing interface term.
double fd_eps_bar(std::span<const double> a, int element, double c, double h);

struct EquivalenceReport {
  double max_deviation = 0.0;  // relative to the max |fd_eps_bar| per field
  int trials = 0;
};

/// Draw random nodal fields on uniform meshes of 10..400 elements and
/// compare the assembled-and-solved eps_bar against fd_eps_bar element by
/// element. Deterministic for a fixed seed.
EquivalenceReport check_fd_equivalence(int trials, std::uint64_t seed);

}  // namespace graddam
