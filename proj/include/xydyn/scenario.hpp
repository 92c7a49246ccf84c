/*
 * Copyright 2026 The xydyn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xydyn {

enum class ScenarioType {
  vacuum_only,
  singlet_on_vacuum,
  psi_bell,
  phi_bell,
  ground_state_equilibrium,
  singlet_knitted_gs,
};

enum class EngineType { analytic, oracle };

enum class MeasureKind {
  concurrence,        // pair (x, x+d)
  one_tangle,         // site x
  entropy1,           // site x
  entropy2,           // pair (x, x+d)
  bell_fidelities,    // pair (x, x+d), four rows
  tangle_deviation,   // site x against the reference state, two rows
  total_concurrence,  // site x, partners within the partner range
  ckw_residual,       // site x, partners within the partner range
};

struct MeasureSpec {
  MeasureKind kind;
  int distance = 1;
};

struct ScenarioConfig {
  double lambda = 0.0;
  double gamma = 0.0;
  ScenarioType type = ScenarioType::vacuum_only;
  int i = 0, j = 1;
  double phi = 0.0;
  int x_min = 0, x_max = 0;
  double t_min = 0.0, t_max = 0.0, dt = 1.0;
  int partner_range = 8;
  std::vector<MeasureSpec> measures;
  EngineType engine = EngineType::analytic;
  int n_sites = 12;

  // field-level checks, throws config_invalid
  void validate() const;
  std::vector<double> times() const;
};

// `section.key = value` lines, '#' starts a comment
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::string& path);

std::string scenario_name(ScenarioType t);
std::string engine_name(EngineType e);

struct GridRow {
  std::string measure;
  int x;
  double t;
  double value;
};

struct GridResult {
  std::vector<GridRow> rows;  // ordered by (measure, x, t)
};

GridResult run(const ScenarioConfig& config, int threads = 1);

// 12 significant digits, shortest form, no negative zero
std::string format_value(double v);
void write_csv(const GridResult& result, std::ostream& out);
void write_csv(const GridResult& result, const std::string& path);
std::string to_csv(const GridResult& result);

}  // namespace xydyn
