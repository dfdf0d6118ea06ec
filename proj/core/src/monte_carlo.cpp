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

#include "dpslam/monte_carlo.hpp"

#include <atomic>
#include <thread>

#include <json.hpp>

#include "dpslam/csv.hpp"
#include "dpslam/rng.hpp"

namespace dpslam {

MonteCarloResult run_monte_carlo(const ScenarioConfig& cfg) {
  cfg.validate();

  MonteCarloResult result;
  result.trials.resize(cfg.trials);
  result.trial_seeds.resize(cfg.trials);
  for (int i = 0; i < cfg.trials; ++i)
    result.trial_seeds[i] = trial_seed(cfg.seed, i);

  const auto run_one = [&](int i) {
    TrialOptions opt;
    if (i == 0) {
      opt.record_measurements = true;
      opt.record_births = true;
      opt.record_maps = true;
    }
    result.trials[i] = run_trial(cfg, result.trial_seeds[i], i, opt);
  };

  int workers = cfg.threads;
  if (workers == 0)
    workers = static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min(workers, cfg.trials));

  if (workers == 1) {
    for (int i = 0; i < cfg.trials; ++i) run_one(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < cfg.trials;
             i = next.fetch_add(1))
          run_one(i);
      });
    }
    for (std::thread& t : pool) t.join();
  }

  result.aggregates = aggregate(result.trials, cfg.gospa);
  return result;
}

namespace {

std::string kind_name(LandmarkKind kind) {
  switch (kind) {
    case LandmarkKind::BS:
      return "BS";
    case LandmarkKind::VA:
      return "VA";
    case LandmarkKind::SP:
      return "SP";
  }
  return "?";
}

void write_states(const TrialRecord& trial,
                  const std::filesystem::path& file) {
  CsvWriter csv(file);
  csv.field("k");
  for (const char* n : {"x", "y", "z", "heading", "speed", "turn_rate",
                        "clock_bias"})
    csv.field(std::string("mean_") + n);
  for (const char* n : {"x", "y", "z", "heading", "speed", "turn_rate",
                        "clock_bias"})
    csv.field(std::string("std_") + n);
  csv.end_row();
  for (const StepRecord& s : trial.steps) {
    csv.field(s.k);
    for (int i = 0; i < 7; ++i) csv.field(s.est_mean[i]);
    for (int i = 0; i < 7; ++i) csv.field(s.est_std[i]);
    csv.end_row();
  }
}

void write_measurements(const TrialRecord& trial,
                        const std::filesystem::path& file) {
  CsvWriter csv(file);
  for (const char* n :
       {"k", "tag", "toa", "doa_az", "doa_el", "dod_az", "dod_el"})
    csv.field(std::string(n));
  csv.end_row();
  for (const LoggedMeasurement& m : trial.measurements) {
    csv.field(m.k).field(m.tag.name());
    csv.field(m.z.toa).field(m.z.doa_az).field(m.z.doa_el);
    csv.field(m.z.dod_az).field(m.z.dod_el);
    csv.end_row();
  }
}

void write_maps(const TrialRecord& trial, const std::filesystem::path& file) {
  CsvWriter csv(file);
  for (const char* n : {"k", "kind", "cluster_id", "center_x", "center_y",
                        "center_z", "count", "declared"})
    csv.field(std::string(n));
  csv.end_row();
  for (const MapSnapshotRow& r : trial.map_snapshots) {
    csv.field(r.k).field(kind_name(r.kind)).field(r.cluster_id);
    csv.field(r.center.x()).field(r.center.y()).field(r.center.z());
    csv.field(r.count).field(static_cast<long>(r.declared ? 1 : 0));
    csv.end_row();
  }
}

void write_births(const TrialRecord& trial,
                  const std::filesystem::path& file) {
  CsvWriter csv(file);
  for (const char* n : {"k", "kind", "source_tag", "x", "y", "z"})
    csv.field(std::string(n));
  csv.end_row();
  for (const LoggedBirth& b : trial.births) {
    csv.field(b.k).field(kind_name(b.birth.kind)).field(b.source_tag);
    csv.field(b.birth.mean.x()).field(b.birth.mean.y());
    csv.field(b.birth.mean.z());
    csv.end_row();
  }
}

void write_metrics(const std::vector<AggregateRow>& rows,
                   const std::filesystem::path& file) {
  CsvWriter csv(file);
  for (const char* n : {"k", "mae_pos", "rmse_bias", "rmse_heading",
                        "gospa_va", "gospa_sp"})
    csv.field(std::string(n));
  csv.end_row();
  for (const AggregateRow& r : rows) {
    csv.field(r.k).field(r.mae_pos).field(r.rmse_bias).field(r.rmse_heading);
    csv.field(r.gospa_va).field(r.gospa_sp);
    csv.end_row();
  }
}

}  // namespace

void write_outputs(const MonteCarloResult& result, const ScenarioConfig& cfg,
                   const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  if (result.trials.empty())
    throw std::invalid_argument("no trials to write");

  const TrialRecord& first = result.trials.front();
  write_states(first, out_dir / "states.csv");
  write_measurements(first, out_dir / "measurements.csv");
  write_maps(first, out_dir / "maps.csv");
  write_births(first, out_dir / "births.csv");
  write_metrics(result.aggregates, out_dir / "metrics.csv");

  nlohmann::ordered_json manifest;
  manifest["config"] = cfg.to_key_values();
  manifest["master_seed"] = cfg.seed;
  manifest["trial_seeds"] = result.trial_seeds;
  nlohmann::ordered_json checksums;
  for (const char* name : {"states.csv", "measurements.csv", "maps.csv",
                           "births.csv", "metrics.csv"})
    checksums[name] = file_checksum(out_dir / name);
  manifest["checksums"] = checksums;
  std::vector<double> wall;
  wall.reserve(result.trials.size());
  for (const TrialRecord& t : result.trials) wall.push_back(t.wall_ms);
  manifest["trial_wall_ms"] = wall;

  std::ofstream out(out_dir / "manifest.json");
  out << manifest.dump(2) << "\n";
}

}  // namespace dpslam
