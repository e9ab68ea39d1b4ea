#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "graddam1d/material.hpp"
#include "graddam1d/mesh.hpp"
#include "graddam1d/solver.hpp"

namespace graddam {

/// Error in the run configuration. The message names the offending field.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GeometryConfig {
  double length = 100.0;  // mm
  AreaProfile profile;
};

struct OutputConfig {
  std::string directory = "out";
  std::vector<int> profile_steps;  // 1-based; empty selects the final step
};

struct RunConfig {
  GeometryConfig geometry;
  MaterialParams material;
  int n_elements = 100;
  SolverConfig solver;
  OutputConfig output;

  void validate() const;  // throws ConfigError naming the bad field
  Mesh1D build_mesh() const;
};

RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& config);

/// Parse a JSON config file. Throws ConfigError for unreadable files,
/// malformed JSON, missing fields, or out-of-range values.
RunConfig load_config(const std::string& path);
void save_config(const RunConfig& config, const std::string& path);

/// Benchmark configurations:
///   tapered        bar tapering from area 1.0 at the ends to 0.8 at the
///                  centre, c = 1 mm
///   local_tapered  the same bar with c = 0 (local damage)
///   narrow         bar with a piecewise-constant narrow central section,
///                  c = 1 mm
/// Throws ConfigError for unknown names, listing the valid ones.
RunConfig preset(const std::string& name);

std::vector<std::string> preset_names();

}  // namespace graddam
