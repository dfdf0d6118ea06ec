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

#include "dpslam/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dpslam/csv.hpp"

namespace dpslam {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<double> parse_numbers(const std::string& key,
                                  const std::string& value, int expected) {
  std::istringstream in(value);
  std::vector<double> out;
  double v;
  while (in >> v) out.push_back(v);
  if (!in.eof())
    throw ConfigError(key + ": cannot parse '" + value + "'");
  if (expected >= 0 && static_cast<int>(out.size()) != expected)
    throw ConfigError(key + ": expected " + std::to_string(expected) +
                      " numbers, got " + std::to_string(out.size()));
  return out;
}

double parse_scalar(const std::string& key, const std::string& value) {
  return parse_numbers(key, value, 1)[0];
}

long parse_integer(const std::string& key, const std::string& value) {
  const double v = parse_scalar(key, value);
  const long i = static_cast<long>(v);
  if (static_cast<double>(i) != v)
    throw ConfigError(key + ": expected an integer, got '" + value + "'");
  return i;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError(key + ": expected true/false, got '" + value + "'");
}

std::vector<Vec3> parse_points(const std::string& key,
                               const std::string& value) {
  std::vector<Vec3> out;
  std::istringstream in(value);
  std::string item;
  while (std::getline(in, item, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto nums = parse_numbers(key, item, 3);
    out.emplace_back(nums[0], nums[1], nums[2]);
  }
  return out;
}

template <typename Vec>
std::string numbers_to_string(const Vec& v) {
  std::string out;
  for (int i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += format_double(v[i]);
  }
  return out;
}

std::string points_to_string(const std::vector<Vec3>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += "; ";
    out += numbers_to_string(pts[i]);
  }
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

}  // namespace

void ScenarioConfig::validate() const {
  require(k_max >= 1, "k_max must be >= 1");
  require(dt > 0.0, "dt must be positive");
  require(initial_state[kStateSpeed] >= 0.0, "initial speed must be >= 0");
  require(initial_std.minCoeff() >= 0.0, "initial_std entries must be >= 0");
  require(process_noise_diag.minCoeff() >= 0.0,
          "process_noise_diag entries must be >= 0");
  require(measurement_noise_diag.minCoeff() >= 0.0,
          "measurement_noise_diag entries must be >= 0");
  require(p_detect >= 0.0 && p_detect <= 1.0, "p_detect must be in [0, 1]");
  require(sp_fov >= 0.0, "sp_fov must be >= 0");
  require(clutter_rate >= 0.0, "clutter_rate must be >= 0");
  require(r_max > 0.0, "r_max must be positive");
  require(sim_noise_scale >= 0.0, "sim_noise_scale must be >= 0");
  require(sp_z_min <= sp_z_max, "sp_z_min must be <= sp_z_max");
  require(dp.concentration > 0.0, "dp_concentration must be positive");
  require(dp.declare_va >= 1 && dp.declare_sp >= 1,
          "declaration thresholds must be >= 1");
  require(dp.sigma0.diagonal().minCoeff() > 0.0,
          "dp_sigma0_diag entries must be positive");
  require(dp.anchor_sigma.diagonal().minCoeff() > 0.0,
          "dp_anchor_sigma_diag entries must be positive");
  require(gospa.p >= 1.0, "gospa_p must be >= 1");
  require(gospa.c > 0.0, "gospa_c must be positive");
  require(gospa.alpha > 0.0 && gospa.alpha <= 2.0,
          "gospa_alpha must be in (0, 2]");
  require(trials >= 1, "trials must be >= 1");
  require(threads >= 0, "threads must be >= 0");
  for (const Vec3& va : va_positions)
    require((va - bs_position).norm() > 1e-6,
            "a virtual anchor coincides with the BS");
}

std::map<std::string, std::string> ScenarioConfig::to_key_values() const {
  std::map<std::string, std::string> kv;
  kv["k_max"] = std::to_string(k_max);
  kv["dt"] = format_double(dt);
  kv["initial_state"] = numbers_to_string(initial_state);
  kv["initial_std"] = numbers_to_string(initial_std);
  kv["process_noise_diag"] = numbers_to_string(process_noise_diag);
  kv["measurement_noise_diag"] = numbers_to_string(measurement_noise_diag);
  kv["bs_position"] = numbers_to_string(bs_position);
  kv["va_positions"] = points_to_string(va_positions);
  kv["sp_positions"] = points_to_string(sp_positions);
  kv["sp_z_uniform"] = sp_z_uniform ? "true" : "false";
  kv["sp_z_min"] = format_double(sp_z_min);
  kv["sp_z_max"] = format_double(sp_z_max);
  kv["p_detect"] = format_double(p_detect);
  kv["sp_fov"] = format_double(sp_fov);
  kv["clutter_rate"] = format_double(clutter_rate);
  kv["r_max"] = format_double(r_max);
  kv["sim_noise_scale"] = format_double(sim_noise_scale);
  kv["dp_concentration"] = format_double(dp.concentration);
  kv["dp_mu0"] = numbers_to_string(dp.mu0);
  kv["dp_sigma0_diag"] = numbers_to_string(Vec3(dp.sigma0.diagonal()));
  kv["dp_declare_va"] = std::to_string(dp.declare_va);
  kv["dp_declare_sp"] = std::to_string(dp.declare_sp);
  kv["dp_anchor_sigma_diag"] =
      numbers_to_string(Vec3(dp.anchor_sigma.diagonal()));
  kv["gospa_p"] = format_double(gospa.p);
  kv["gospa_c"] = format_double(gospa.c);
  kv["gospa_alpha"] = format_double(gospa.alpha);
  kv["trials"] = std::to_string(trials);
  kv["seed"] = std::to_string(seed);
  kv["threads"] = std::to_string(threads);
  kv["los_update"] = los_update ? "true" : "false";
  return kv;
}

ScenarioConfig ScenarioConfig::from_key_values(
    const std::map<std::string, std::string>& kv) {
  ScenarioConfig cfg;
  for (const auto& [key, value] : kv) {
    if (key == "k_max") {
      cfg.k_max = static_cast<int>(parse_integer(key, value));
    } else if (key == "dt") {
      cfg.dt = parse_scalar(key, value);
    } else if (key == "initial_state") {
      const auto v = parse_numbers(key, value, 7);
      cfg.initial_state = Eigen::Map<const Vec7>(v.data());
    } else if (key == "initial_std") {
      const auto v = parse_numbers(key, value, 7);
      cfg.initial_std = Eigen::Map<const Vec7>(v.data());
    } else if (key == "process_noise_diag") {
      const auto v = parse_numbers(key, value, 7);
      cfg.process_noise_diag = Eigen::Map<const Vec7>(v.data());
    } else if (key == "measurement_noise_diag") {
      const auto v = parse_numbers(key, value, 5);
      cfg.measurement_noise_diag = Eigen::Map<const Vec5>(v.data());
    } else if (key == "bs_position") {
      const auto v = parse_numbers(key, value, 3);
      cfg.bs_position = Vec3(v[0], v[1], v[2]);
    } else if (key == "va_positions") {
      cfg.va_positions = parse_points(key, value);
    } else if (key == "sp_positions") {
      cfg.sp_positions = parse_points(key, value);
    } else if (key == "sp_z_uniform") {
      cfg.sp_z_uniform = parse_bool(key, value);
    } else if (key == "sp_z_min") {
      cfg.sp_z_min = parse_scalar(key, value);
    } else if (key == "sp_z_max") {
      cfg.sp_z_max = parse_scalar(key, value);
    } else if (key == "p_detect") {
      cfg.p_detect = parse_scalar(key, value);
    } else if (key == "sp_fov") {
      cfg.sp_fov = parse_scalar(key, value);
    } else if (key == "clutter_rate") {
      cfg.clutter_rate = parse_scalar(key, value);
    } else if (key == "r_max") {
      cfg.r_max = parse_scalar(key, value);
    } else if (key == "sim_noise_scale") {
      cfg.sim_noise_scale = parse_scalar(key, value);
    } else if (key == "dp_concentration") {
      cfg.dp.concentration = parse_scalar(key, value);
    } else if (key == "dp_mu0") {
      const auto v = parse_numbers(key, value, 3);
      cfg.dp.mu0 = Vec3(v[0], v[1], v[2]);
    } else if (key == "dp_sigma0_diag") {
      const auto v = parse_numbers(key, value, 3);
      cfg.dp.sigma0 = Vec3(v[0], v[1], v[2]).asDiagonal();
    } else if (key == "dp_declare_va") {
      cfg.dp.declare_va = static_cast<int>(parse_integer(key, value));
    } else if (key == "dp_declare_sp") {
      cfg.dp.declare_sp = static_cast<int>(parse_integer(key, value));
    } else if (key == "dp_anchor_sigma_diag") {
      const auto v = parse_numbers(key, value, 3);
      cfg.dp.anchor_sigma = Vec3(v[0], v[1], v[2]).asDiagonal();
    } else if (key == "gospa_p") {
      cfg.gospa.p = parse_scalar(key, value);
    } else if (key == "gospa_c") {
      cfg.gospa.c = parse_scalar(key, value);
    } else if (key == "gospa_alpha") {
      cfg.gospa.alpha = parse_scalar(key, value);
    } else if (key == "trials") {
      cfg.trials = static_cast<int>(parse_integer(key, value));
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(parse_integer(key, value));
    } else if (key == "threads") {
      cfg.threads = static_cast<int>(parse_integer(key, value));
    } else if (key == "los_update") {
      cfg.los_update = parse_bool(key, value);
    } else {
      throw ConfigError("unknown configuration key: " + key);
    }
  }
  return cfg;
}

ScenarioConfig ScenarioConfig::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot open config file: " + file.string());

  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(file.string() + ":" + std::to_string(lineno) +
                        ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (kv.count(key))
      throw ConfigError(file.string() + ":" + std::to_string(lineno) +
                        ": duplicate key '" + key + "'");
    kv[key] = value;
  }
  return from_key_values(kv);
}

void ScenarioConfig::save(const std::filesystem::path& file) const {
  std::ofstream out(file);
  if (!out) throw ConfigError("cannot write config file: " + file.string());
  out << "# dpslam scenario configuration\n";
  out << "# state order: x y z heading speed turn_rate clock_bias\n";
  out << "# measurement order: toa doa_az doa_el dod_az dod_el\n";
  for (const auto& [key, value] : to_key_values())
    out << key << " = " << value << "\n";
}

}  // namespace dpslam
