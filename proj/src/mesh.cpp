#include "graddam1d/mesh.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace graddam {

double AreaProfile::evaluate(double x, double length) const {
  switch (kind) {
    case Kind::Uniform:
      return end_area;
    case Kind::LinearTaper: {
      // |2x/L - 1| is 1 at the ends and 0 at the midpoint.
      const double s = std::abs(2.0 * x / length - 1.0);
      return center_area + (end_area - center_area) * s;
    }
    case Kind::NarrowCenter: {
      const double half_span = 0.5 * narrow_span;
      return std::abs(x - 0.5 * length) <= half_span ? center_area : end_area;
    }
  }
  throw std::logic_error("AreaProfile: unknown kind");
}

void AreaProfile::validate(double length) const {
  if (end_area <= 0.0) {
    throw std::invalid_argument("AreaProfile: end_area must be positive");
  }
  if (kind != Kind::Uniform && center_area <= 0.0) {
    throw std::invalid_argument("AreaProfile: center_area must be positive");
  }
  if (kind == Kind::NarrowCenter &&
      (narrow_span <= 0.0 || narrow_span > length)) {
    throw std::invalid_argument(
        "AreaProfile: narrow_span must lie in (0, length]");
  }
}

Mesh1D::Mesh1D(std::vector<double> node_coords,
               const std::vector<double>& element_areas)
    : node_coords_(std::move(node_coords)) {
  const int n_nodes = static_cast<int>(node_coords_.size());
  if (n_nodes < 2) {
    throw std::invalid_argument("Mesh1D: need at least two nodes");
  }
  if (element_areas.size() != node_coords_.size() - 1) {
    throw std::invalid_argument("Mesh1D: one area per element required");
  }
  for (int i = 0; i + 1 < n_nodes; ++i) {
    if (!(node_coords_[i + 1] > node_coords_[i])) {
      throw std::invalid_argument(
          "Mesh1D: node coordinates must be strictly increasing");
    }
  }

  elements_.reserve(element_areas.size());
  for (int e = 0; e < n_nodes - 1; ++e) {
    if (!(element_areas[e] > 0.0)) {
      throw std::invalid_argument("Mesh1D: element area must be positive");
    }
    elements_.push_back(Element{e, e + 1, element_areas[e]});
  }

  // Interfaces are exactly the interior nodes, enumerated left to right.
  interfaces_.reserve(elements_.size() - 1);
  for (int i = 0; i + 1 < static_cast<int>(elements_.size()); ++i) {
    interfaces_.push_back(Interface{i, i + 1, node_coords_[i + 1]});
  }
}

double Mesh1D::element_length(int e) const {
  const Element& el = elements_.at(e);
  return node_coords_[el.right_node] - node_coords_[el.left_node];
}

double Mesh1D::element_centroid(int e) const {
  const Element& el = elements_.at(e);
  return 0.5 * (node_coords_[el.left_node] + node_coords_[el.right_node]);
}

Mesh1D build_uniform_mesh(double length, int n_elements,
                          const AreaProfile& profile) {
  if (!(length > 0.0)) {
    throw std::invalid_argument("build_uniform_mesh: length must be positive");
  }
  if (n_elements < 2) {
    throw std::invalid_argument(
        "build_uniform_mesh: at least two elements required, got " +
        std::to_string(n_elements));
  }
  profile.validate(length);

  const double h = length / n_elements;
  std::vector<double> coords(n_elements + 1);
  for (int i = 0; i <= n_elements; ++i) {
    coords[i] = (i == n_elements) ? length : i * h;
  }

  std::vector<double> areas(n_elements);
  for (int e = 0; e < n_elements; ++e) {
    const double centroid = 0.5 * (coords[e] + coords[e + 1]);
    areas[e] = profile.evaluate(centroid, length);
  }

  return Mesh1D(std::move(coords), areas);
}

double interface_length_scale(const Mesh1D& mesh, int interface_id) {
  if (interface_id < 0 || interface_id >= mesh.n_interfaces()) {
    throw std::out_of_range("interface_length_scale: invalid interface id " +
                            std::to_string(interface_id));
  }
  const Interface& itf = mesh.interface(interface_id);
  return 0.5 * (mesh.element_length(itf.left_element) +
                mesh.element_length(itf.right_element));
}

}  // namespace graddam
