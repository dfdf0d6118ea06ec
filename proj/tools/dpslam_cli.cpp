// Copyright (C) 2026 dpslam contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "dpslam/csv.hpp"
#include "dpslam/monte_carlo.hpp"
#include "dpslam/motion.hpp"
#include "dpslam/rng.hpp"
#include "dpslam/trial.hpp"

namespace fs = std::filesystem;

namespace {

dpslam::ScenarioConfig load_config(const std::string& path) {
  if (path.empty()) return dpslam::ScenarioConfig{};
  return dpslam::ScenarioConfig::load(path);
}

int cmd_run(const std::string& config_path, int trials, long long seed,
            int threads, const std::string& out_dir) {
  dpslam::ScenarioConfig cfg = load_config(config_path);
  if (trials > 0) cfg.trials = trials;
  if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
  if (threads >= 0) cfg.threads = threads;
  cfg.validate();

  const dpslam::MonteCarloResult result = dpslam::run_monte_carlo(cfg);
  dpslam::write_outputs(result, cfg, out_dir);

  double total_ms = 0.0;
  for (const auto& t : result.trials) total_ms += t.wall_ms;
  std::cout << "ran " << cfg.trials << " trials (seed " << cfg.seed << ", "
            << total_ms / cfg.trials << " ms/trial avg), outputs in "
            << out_dir << "\n";
  const auto& last = result.aggregates.back();
  std::cout << "final step: mae_pos=" << last.mae_pos
            << " m, gospa_va=" << last.gospa_va
            << ", gospa_sp=" << last.gospa_sp << "\n";
  return 0;
}

int cmd_validate(const std::string& config_path) {
  const dpslam::ScenarioConfig cfg = load_config(config_path);
  cfg.validate();
  std::cout << "config ok: " << cfg.k_max << " steps, "
            << cfg.va_positions.size() << " VAs, " << cfg.sp_positions.size()
            << " SPs, " << cfg.trials << " trials\n";
  return 0;
}

int cmd_dump_truth(const std::string& config_path, const std::string& out) {
  const dpslam::ScenarioConfig cfg = load_config(config_path);
  cfg.validate();

  dpslam::CsvWriter csv(out);
  for (const char* n :
       {"k", "x", "y", "z", "heading", "speed", "turn_rate", "clock_bias"})
    csv.field(std::string(n));
  csv.end_row();
  dpslam::VehicleState s =
      dpslam::VehicleState::from_vector(cfg.initial_state);
  for (int k = 0; k <= cfg.k_max; ++k) {
    if (k > 0) s = dpslam::ground_truth_step(s, cfg.dt);
    const dpslam::Vec7 v = s.to_vector();
    csv.field(k);
    for (int i = 0; i < 7; ++i) csv.field(v[i]);
    csv.end_row();
  }
  std::cout << "wrote " << out << "\n";
  return 0;
}

int cmd_dump_births(const std::string& config_path, long long seed,
                    const std::string& out) {
  dpslam::ScenarioConfig cfg = load_config(config_path);
  if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
  cfg.validate();

  dpslam::TrialOptions opt;
  opt.record_births = true;
  opt.record_measurements = true;
  const dpslam::TrialRecord trial =
      dpslam::run_trial(cfg, dpslam::trial_seed(cfg.seed, 0), 0, opt);

  dpslam::CsvWriter csv(out);
  for (const char* n : {"k", "kind", "source_tag", "x", "y", "z"})
    csv.field(std::string(n));
  csv.end_row();
  for (const auto& b : trial.births) {
    csv.field(b.k);
    csv.field(std::string(b.birth.kind == dpslam::LandmarkKind::SP ? "SP"
                                                                   : "VA"));
    csv.field(b.source_tag);
    csv.field(b.birth.mean.x()).field(b.birth.mean.y());
    csv.field(b.birth.mean.z());
    csv.end_row();
  }
  std::cout << "wrote " << trial.births.size() << " birth points to " << out
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radio SLAM simulator: EKF vehicle tracking with "
               "Dirichlet-process landmark mapping"};
  app.require_subcommand(1);

  std::string config_path, out_dir = "out", out_file;
  int trials = -1, threads = -1;
  long long seed = -1;

  CLI::App* run = app.add_subcommand("run", "run Monte-Carlo trials");
  run->add_option("--config", config_path, "scenario config file");
  run->add_option("--trials", trials, "override trial count");
  run->add_option("--seed", seed, "override master seed");
  run->add_option("--threads", threads, "worker threads (0 = auto)");
  run->add_option("--out", out_dir, "output directory")->required();

  CLI::App* validate =
      app.add_subcommand("validate-config", "parse and check a config file");
  validate->add_option("--config", config_path, "scenario config file")
      ->required();

  CLI::App* truth =
      app.add_subcommand("dump-truth", "write the ground-truth trajectory");
  truth->add_option("--config", config_path, "scenario config file");
  truth->add_option("--out", out_file, "output CSV file")->required();

  CLI::App* births = app.add_subcommand(
      "dump-births", "run one trial and dump all birth points");
  births->add_option("--config", config_path, "scenario config file");
  births->add_option("--seed", seed, "override master seed");
  births->add_option("--out", out_file, "output CSV file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed())
      return cmd_run(config_path, trials, seed, threads, out_dir);
    if (validate->parsed()) return cmd_validate(config_path);
    if (truth->parsed()) return cmd_dump_truth(config_path, out_file);
    if (births->parsed()) return cmd_dump_births(config_path, seed, out_file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
