// SPDX-License-Identifier: Apache-2.0
//
// aircomp-fas: OFDM over-the-air computation with a 2D fluid antenna receiver
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
// ------------------------------------------------------------------------

#include "aircomp/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace aircomp {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument(message);
}

int get_int(const json& j, const std::string& key, int fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number_integer()) fail(key + ": must be an integer");
  return v.get<int>();
}

double get_double(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number()) fail(key + ": must be a number");
  return v.get<double>();
}

std::uint64_t get_seed(const json& j, const std::string& key,
                       std::uint64_t fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number_integer()) fail(key + ": must be an integer");
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  const auto s = v.get<std::int64_t>();
  if (s < 0) fail(key + ": must be >= 0");
  return static_cast<std::uint64_t>(s);
}

Region get_region(const json& j, const Region& fallback) {
  if (!j.contains("region")) return fallback;
  const auto& v = j.at("region");
  if (!v.is_object()) fail("region: must be an object with x_lo/x_hi/y_lo/y_hi");
  static const std::set<std::string> kRegionKeys = {"x_lo", "x_hi", "y_lo",
                                                    "y_hi"};
  for (const auto& [key, value] : v.items()) {
    (void)value;
    if (kRegionKeys.count(key) == 0) fail("region: unknown key '" + key + "'");
  }
  Region r;
  for (const auto& key : kRegionKeys) {
    if (!v.contains(key)) fail("region: missing key '" + key + "'");
    if (!v.at(key).is_number()) fail("region." + key + ": must be a number");
  }
  r.x_lo = v.at("x_lo").get<double>();
  r.x_hi = v.at("x_hi").get<double>();
  r.y_lo = v.at("y_lo").get<double>();
  r.y_hi = v.at("y_hi").get<double>();
  return r;
}

}  // namespace

SystemConfig load_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("config: top-level document must be an object");

  static const std::set<std::string> kKnownKeys = {
      "schema_version", "num_users",    "num_subcarriers", "num_antennas",
      "num_paths",      "wavelength",   "min_spacing",     "region",
      "power_budget",   "noise_power",  "grid_step",       "max_ao_iters",
      "max_mm_iters",   "ao_tol",       "mm_tol",          "rng_seed",
      "max_delay"};
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (kKnownKeys.count(key) == 0) fail("unknown config key: '" + key + "'");
  }

  const int schema_version = get_int(doc, "schema_version", 1);
  if (schema_version != 1)
    fail("schema_version: unsupported version " +
         std::to_string(schema_version));

  SystemConfig cfg;
  cfg.num_users = get_int(doc, "num_users", cfg.num_users);
  cfg.num_subcarriers = get_int(doc, "num_subcarriers", cfg.num_subcarriers);
  cfg.num_antennas = get_int(doc, "num_antennas", cfg.num_antennas);
  cfg.num_paths = get_int(doc, "num_paths", cfg.num_paths);
  cfg.wavelength = get_double(doc, "wavelength", cfg.wavelength);

  // Geometry defaults track the wavelength in effect.
  const double lambda = cfg.wavelength;
  cfg.min_spacing = get_double(doc, "min_spacing", lambda / 2.0);
  cfg.region = get_region(
      doc, Region{-1.5 * lambda, 1.5 * lambda, -1.5 * lambda, 1.5 * lambda});
  cfg.grid_step = get_double(doc, "grid_step", lambda / 20.0);

  cfg.power_budget = get_double(doc, "power_budget", cfg.power_budget);
  cfg.noise_power = get_double(doc, "noise_power", cfg.noise_power);
  cfg.max_ao_iters = get_int(doc, "max_ao_iters", cfg.max_ao_iters);
  cfg.max_mm_iters = get_int(doc, "max_mm_iters", cfg.max_mm_iters);
  cfg.ao_tol = get_double(doc, "ao_tol", cfg.ao_tol);
  cfg.mm_tol = get_double(doc, "mm_tol", cfg.mm_tol);
  cfg.rng_seed = get_seed(doc, "rng_seed", cfg.rng_seed);
  cfg.max_delay = get_int(doc, "max_delay", cfg.max_delay);

  cfg.validate();
  return cfg;
}

SystemConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("config: cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_config(buffer.str());
}

}  // namespace aircomp
