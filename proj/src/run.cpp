#include "graddam1d/run.hpp"

#include <filesystem>
#include <set>

#include "graddam1d/output.hpp"

namespace graddam {

RunOutcome execute_run(const RunConfig& config) {
  config.validate();

  const Mesh1D mesh = config.build_mesh();
  const std::filesystem::path dir(config.output.directory);
  std::filesystem::create_directories(dir);

  save_config(config, (dir / "config.json").string());

  RunOutcome outcome;
  outcome.output_directory = dir.string();
  outcome.result = run_simulation(mesh, config.material, config.solver);

  const std::vector<LoadStepRecord>& records = outcome.result.records;
  write_load_displacement_csv((dir / "load_displacement.csv").string(),
                              records);

  std::set<int> profile_steps(config.output.profile_steps.begin(),
                              config.output.profile_steps.end());
  if (profile_steps.empty()) {
    profile_steps.insert(config.solver.n_steps);
  }
  for (const LoadStepRecord& rec : records) {
    if (profile_steps.count(rec.step)) {
      write_profile_csv(
          (dir / ("profile_" + std::to_string(rec.step) + ".csv")).string(),
          mesh, rec);
    }
  }

  write_run_summary((dir / "run_summary.txt").string(), outcome.result);
  write_plot_script((dir / "plot_results.py").string());
  return outcome;
}

}  // namespace graddam
