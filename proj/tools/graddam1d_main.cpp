#include <CLI11.hpp>
#include <cstdio>
#include <exception>
#include <string>

#include "graddam1d/config.hpp"
#include "graddam1d/fd_oracle.hpp"
#include "graddam1d/run.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitSolverFailure = 2;

int report_run(const graddam::RunOutcome& outcome) {
  const auto& result = outcome.result;
  if (!result.completed) {
    std::fprintf(stderr, "solver failure: %s\n",
                 result.failure_message.c_str());
    std::fprintf(stderr, "partial outputs written to %s\n",
                 outcome.output_directory.c_str());
    if (!result.failed_residual_history.empty()) {
      std::fprintf(stderr, "residual history of the failed step:\n");
      for (double norm : result.failed_residual_history) {
        std::fprintf(stderr, "  %.6e\n", norm);
      }
    }
    return kExitSolverFailure;
  }

  double peak = 0.0;
  for (const auto& rec : result.records) {
    peak = std::max(peak, rec.reaction);
  }
  std::printf("completed %zu load steps, peak reaction %.6g N\n",
              result.records.size(), peak);
  std::printf("outputs written to %s\n", outcome.output_directory.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "1D gradient-enhanced damage solver with a discontinuous Galerkin "
      "treatment of the nonlocal equivalent strain"};
  app.require_subcommand(1);

  std::string config_path;
  CLI::App* run_cmd =
      app.add_subcommand("run", "run a simulation from a config file");
  run_cmd->add_option("config", config_path, "path to a JSON run config")
      ->required();

  std::string preset_name;
  int preset_elements = 0;
  double preset_c = -1.0;
  std::string preset_out;
  CLI::App* preset_cmd =
      app.add_subcommand("preset", "run a built-in benchmark configuration");
  preset_cmd->add_option("name", preset_name, "tapered, local_tapered, narrow")
      ->required();
  preset_cmd->add_option("--n-elements", preset_elements,
                         "override the element count");
  preset_cmd->add_option("--c", preset_c, "override the length scale c [mm]");
  preset_cmd->add_option("--out", preset_out, "output directory");

  int trials = 100;
  std::uint64_t seed = 20240811;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify",
      "cross-check the discrete nonlocal strain against the "
      "finite-difference identities on random fields");
  verify_cmd->add_option("--trials", trials, "number of random fields");
  verify_cmd->add_option("--seed", seed, "RNG seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      return report_run(graddam::execute_run(graddam::load_config(config_path)));
    }
    if (*preset_cmd) {
      graddam::RunConfig config = graddam::preset(preset_name);
      if (preset_elements > 0) config.n_elements = preset_elements;
      if (preset_c >= 0.0) config.material.length_scale = preset_c;
      if (!preset_out.empty()) config.output.directory = preset_out;
      config.validate();
      return report_run(graddam::execute_run(config));
    }
    if (*verify_cmd) {
      const auto report = graddam::check_fd_equivalence(trials, seed);
      std::printf(
          "finite-difference equivalence: %d random fields, "
          "max relative deviation %.3e\n",
          report.trials, report.max_deviation);
      if (report.max_deviation <= 1e-12) {
        return kExitOk;
      }
      std::fprintf(stderr, "deviation exceeds 1e-12\n");
      return kExitSolverFailure;
    }
  } catch (const graddam::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitSolverFailure;
  }
  return kExitOk;
}
