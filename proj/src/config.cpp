#include "graddam1d/config.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace graddam {

namespace {

using nlohmann::json;

const json& require(const json& j, const std::string& key,
                    const std::string& context) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw ConfigError("missing field '" + context + key + "'");
  }
  return *it;
}

double require_number(const json& j, const std::string& key,
                      const std::string& context) {
  const json& v = require(j, key, context);
  if (!v.is_number()) {
    throw ConfigError("field '" + context + key + "' must be a number");
  }
  return v.get<double>();
}

int require_int(const json& j, const std::string& key,
                const std::string& context) {
  const json& v = require(j, key, context);
  if (!v.is_number_integer()) {
    throw ConfigError("field '" + context + key + "' must be an integer");
  }
  return v.get<int>();
}

AreaProfile::Kind parse_profile_kind(const std::string& s) {
  if (s == "uniform") return AreaProfile::Kind::Uniform;
  if (s == "linear_taper") return AreaProfile::Kind::LinearTaper;
  if (s == "narrow_center") return AreaProfile::Kind::NarrowCenter;
  throw ConfigError(
      "field 'geometry.area_profile.kind' must be one of "
      "uniform, linear_taper, narrow_center (got '" + s + "')");
}

std::string profile_kind_name(AreaProfile::Kind kind) {
  switch (kind) {
    case AreaProfile::Kind::Uniform: return "uniform";
    case AreaProfile::Kind::LinearTaper: return "linear_taper";
    case AreaProfile::Kind::NarrowCenter: return "narrow_center";
  }
  return "uniform";
}

}  // namespace

void RunConfig::validate() const {
  try {
    if (!(geometry.length > 0.0)) {
      throw ConfigError("field 'geometry.length' must be positive");
    }
    geometry.profile.validate(geometry.length);
    material.validate();
    if (n_elements < 2) {
      throw ConfigError("field 'mesh.n_elements' must be >= 2");
    }
    solver.validate();
    if (!(solver.end_displacement > 0.0)) {
      throw ConfigError("field 'solver.end_displacement' must be positive");
    }
    for (const int step : output.profile_steps) {
      if (step < 1 || step > solver.n_steps) {
        throw ConfigError("field 'output.profile_steps' entries must lie in [1, n_steps]");
      }
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

Mesh1D RunConfig::build_mesh() const {
  return build_uniform_mesh(geometry.length, n_elements, geometry.profile);
}

RunConfig config_from_json(const json& j) {
  RunConfig config;

  const json& geo = require(j, "geometry", "");
  config.geometry.length = require_number(geo, "length", "geometry.");
  const json& prof = require(geo, "area_profile", "geometry.");
  const json& kind = require(prof, "kind", "geometry.area_profile.");
  if (!kind.is_string()) {
    throw ConfigError("field 'geometry.area_profile.kind' must be a string");
  }
  config.geometry.profile.kind = parse_profile_kind(kind.get<std::string>());
  config.geometry.profile.end_area =
      require_number(prof, "end_area", "geometry.area_profile.");
  if (config.geometry.profile.kind != AreaProfile::Kind::Uniform) {
    config.geometry.profile.center_area =
        require_number(prof, "center_area", "geometry.area_profile.");
  } else {
    config.geometry.profile.center_area = config.geometry.profile.end_area;
  }
  if (config.geometry.profile.kind == AreaProfile::Kind::NarrowCenter) {
    config.geometry.profile.narrow_span =
        require_number(prof, "narrow_span", "geometry.area_profile.");
  }

  const json& mat = require(j, "material", "");
  config.material.youngs_modulus = require_number(mat, "E", "material.");
  config.material.kappa0 = require_number(mat, "kappa0", "material.");
  config.material.kappa_c = require_number(mat, "kappa_c", "material.");
  config.material.length_scale = require_number(mat, "c", "material.");
  if (const auto it = mat.find("damage_law"); it != mat.end()) {
    if (*it != "linear_softening") {
      throw ConfigError(
          "field 'material.damage_law': only 'linear_softening' is supported");
    }
  }

  const json& mesh = require(j, "mesh", "");
  config.n_elements = require_int(mesh, "n_elements", "mesh.");

  const json& solver = require(j, "solver", "");
  config.solver.n_steps = require_int(solver, "n_steps", "solver.");
  config.solver.end_displacement =
      require_number(solver, "end_displacement", "solver.");
  config.solver.newton_tol = require_number(solver, "newton_tol", "solver.");
  config.solver.max_iters = require_int(solver, "max_iters", "solver.");

  if (const auto it = j.find("output"); it != j.end()) {
    if (const auto dir = it->find("directory"); dir != it->end()) {
      config.output.directory = dir->get<std::string>();
    }
    if (const auto steps = it->find("profile_steps"); steps != it->end()) {
      config.output.profile_steps = steps->get<std::vector<int>>();
    }
  }

  config.validate();
  return config;
}

json config_to_json(const RunConfig& config) {
  json prof;
  prof["kind"] = profile_kind_name(config.geometry.profile.kind);
  prof["end_area"] = config.geometry.profile.end_area;
  if (config.geometry.profile.kind != AreaProfile::Kind::Uniform) {
    prof["center_area"] = config.geometry.profile.center_area;
  }
  if (config.geometry.profile.kind == AreaProfile::Kind::NarrowCenter) {
    prof["narrow_span"] = config.geometry.profile.narrow_span;
  }

  json j;
  j["geometry"] = {{"length", config.geometry.length},
                   {"area_profile", prof}};
  j["material"] = {{"E", config.material.youngs_modulus},
                   {"kappa0", config.material.kappa0},
                   {"kappa_c", config.material.kappa_c},
                   {"c", config.material.length_scale},
                   {"damage_law", "linear_softening"}};
  j["mesh"] = {{"n_elements", config.n_elements}};
  j["solver"] = {{"n_steps", config.solver.n_steps},
                 {"end_displacement", config.solver.end_displacement},
                 {"newton_tol", config.solver.newton_tol},
                 {"max_iters", config.solver.max_iters}};
  j["output"] = {{"directory", config.output.directory},
                 {"profile_steps", config.output.profile_steps}};
  return j;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
  return config_from_json(j);
}

void save_config(const RunConfig& config, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ConfigError("cannot write config file '" + path + "'");
  }
  out << config_to_json(config).dump(2) << "\n";
}

RunConfig preset(const std::string& name) {
  RunConfig config;
  config.geometry.length = 100.0;
  config.material.youngs_modulus = 2.0e4;
  config.material.kappa0 = 1.0e-4;
  config.material.kappa_c = 0.0125;
  config.material.length_scale = 1.0;
  config.n_elements = 100;
  config.solver.n_steps = 200;
  config.solver.end_displacement = 0.05;
  config.solver.newton_tol = 1e-8;
  config.solver.max_iters = 25;
  config.output.directory = "out_" + name;

  if (name == "tapered" || name == "local_tapered") {
    config.geometry.profile.kind = AreaProfile::Kind::LinearTaper;
    config.geometry.profile.end_area = 1.0;
    config.geometry.profile.center_area = 0.8;
    if (name == "local_tapered") {
      config.material.length_scale = 0.0;
    }
  } else if (name == "narrow") {
    config.geometry.profile.kind = AreaProfile::Kind::NarrowCenter;
    config.geometry.profile.end_area = 1.0;
    config.geometry.profile.center_area = 0.8;
    config.geometry.profile.narrow_span = 10.0;  // central 10% of the bar
  } else {
    std::string names;
    for (const auto& n : preset_names()) {
      names += names.empty() ? n : ", " + n;
    }
    throw ConfigError("unknown preset '" + name + "' (valid: " + names + ")");
  }

  config.validate();
  return config;
}

std::vector<std::string> preset_names() {
  return {"tapered", "local_tapered", "narrow"};
}

}  // namespace graddam
