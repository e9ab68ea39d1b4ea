#pragma once

#include <vector>

namespace graddam {

/// Cross-sectional area as a function of the axial coordinate.
///
/// Three shapes cover the benchmark geometries: a prismatic bar, a bar
/// tapering linearly from the ends towards the midpoint, and a bar with a
/// piecewise-constant narrow section centred on the midpoint.
struct AreaProfile {
  enum class Kind { Uniform, LinearTaper, NarrowCenter };

  Kind kind = Kind::Uniform;
  double end_area = 1.0;     // mm^2 at x = 0 and x = L
  double center_area = 1.0;  // mm^2 at x = L/2 (LinearTaper, NarrowCenter)
  double narrow_span = 0.0;  // mm, width of the reduced section (NarrowCenter)

  // Area at coordinate x on a bar of the given length. The taper is
  // symmetric about the midpoint; the narrow section is centred on it.
  double evaluate(double x, double length) const;

  void validate(double length) const;
};

struct Element {
  int left_node;
  int right_node;
  double area;  // mm^2, constant over the element (centroid sample)
};

/// An interior boundary shared by two consecutive elements.
struct Interface {
  int left_element;
  int right_element;
  double coordinate;  // mm
};

/// Partition of a bar into line elements with per-element areas.
///
/// Immutable after construction. Node coordinates are strictly increasing,
/// element e spans nodes (e, e+1), and there is one interface per interior
/// node, so n_interfaces == n_elements - 1.
class Mesh1D {
 public:
  Mesh1D(std::vector<double> node_coords, const std::vector<double>& element_areas);

  int n_nodes() const { return static_cast<int>(node_coords_.size()); }
  int n_elements() const { return static_cast<int>(elements_.size()); }
  int n_interfaces() const { return static_cast<int>(interfaces_.size()); }

  double node_coord(int node) const { return node_coords_.at(node); }
  const std::vector<double>& node_coords() const { return node_coords_; }

  const Element& element(int e) const { return elements_.at(e); }
  const Interface& interface(int i) const { return interfaces_.at(i); }

  double element_length(int e) const;
  double element_centroid(int e) const;
  double length() const { return node_coords_.back() - node_coords_.front(); }

 private:
  std::vector<double> node_coords_;
  std::vector<Element> elements_;
  std::vector<Interface> interfaces_;
};

/// Partition [0, length] into n_elements equal elements, sampling the area
/// profile at each element centroid. Requires n_elements >= 2.
Mesh1D build_uniform_mesh(double length, int n_elements, const AreaProfile& profile);

/// Length scale h_e of an interface: the average of the two adjacent
/// element lengths.
double interface_length_scale(const Mesh1D& mesh, int interface_id);

}  // namespace graddam
