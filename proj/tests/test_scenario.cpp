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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "doctest.h"
#include "xydyn/error.hpp"
#include "xydyn/scenario.hpp"

using namespace xydyn;

namespace {

const char* kSinglet = R"(# singlet on the vacuum
model.lambda = 0.5
model.gamma = 0.5
scenario.type = singlet_on_vacuum
scenario.i = 1
scenario.j = 2
grid.x_min = 1
grid.x_max = 4
grid.t_min = 0
grid.t_max = 2
grid.dt = 0.5
grid.partner_range = 3
measures.list = concurrence(1), one_tangle, entropy1, entropy2(2), bell_fidelities, tangle_deviation, total_concurrence, ckw_residual
)";

std::optional<ErrorCode> code_of(const std::string& text) {
  try {
    run(parse_config(text));
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto p = s.find(from);
  REQUIRE(p != std::string::npos);
  return s.replace(p, from.size(), to);
}

std::map<std::string, double> keyed(const GridResult& r) {
  std::map<std::string, double> m;
  for (const auto& row : r.rows) {
    m[row.measure + "@" + std::to_string(row.x) + "@" + format_value(row.t)] = row.value;
  }
  return m;
}

}  // namespace

TEST_CASE("config parsing") {
  const ScenarioConfig c = parse_config(kSinglet);
  CHECK(c.type == ScenarioType::singlet_on_vacuum);
  CHECK(c.i == 1);
  CHECK(c.j == 2);
  CHECK(c.measures.size() == 8);
  CHECK(c.measures[3].distance == 2);
  CHECK(c.times().size() == 5);
  CHECK(c.engine == EngineType::analytic);
  const ScenarioConfig o = parse_config(replace(kSinglet, "grid.dt", "engine.type = oracle(8)\ngrid.dt"));
  CHECK(o.engine == EngineType::oracle);
  CHECK(o.n_sites == 8);
}

TEST_CASE("config errors") {
  CHECK(code_of(replace(kSinglet, "model.gamma = 0.5\n", "")) == ErrorCode::config_invalid);
  CHECK(code_of(replace(kSinglet, "grid.dt = 0.5", "grid.dt = 0")) == ErrorCode::config_invalid);
  CHECK(code_of(replace(kSinglet, "grid.x_max = 4", "grid.x_max = 0")) == ErrorCode::config_invalid);
  CHECK(code_of(replace(kSinglet, "grid.dt", "grid.foo = 1\ngrid.dt")) == ErrorCode::config_invalid);
  CHECK(code_of(replace(kSinglet, "grid.dt", "grid.dt = 1\ngrid.dt")) == ErrorCode::config_invalid);
  CHECK(code_of(replace(kSinglet, "one_tangle", "one_tangle(2)")) == ErrorCode::config_invalid);
  CHECK(code_of(replace(kSinglet, "one_tangle", "magic")) == ErrorCode::config_invalid);
  CHECK(code_of(replace(kSinglet, "model.gamma = 0.5", "model.gamma = 1.5")) ==
        ErrorCode::config_invalid);
  CHECK(code_of(replace(kSinglet, "scenario.j = 2", "scenario.j = 1")) == ErrorCode::config_invalid);
  CHECK(code_of(replace(kSinglet, "grid.dt", "engine.type = oracle(14)\ngrid.dt")) ==
        ErrorCode::config_invalid);
  CHECK(code_of(replace(kSinglet, "model.lambda = 0.5", "model.lambda = abc")) ==
        ErrorCode::config_invalid);
  // field name appears in the message
  try {
    parse_config(replace(kSinglet, "grid.dt = 0.5", "grid.dt = -1"));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("grid.dt") != std::string::npos);
  }
  CHECK_THROWS_AS(load_config("/nonexistent/x.cfg"), Error);
}

TEST_CASE("engine capability") {
  const std::string phi = replace(kSinglet, "singlet_on_vacuum", "phi_bell");
  CHECK(code_of(phi) == ErrorCode::engine_capability);
  CHECK(code_of(replace(phi, "model.gamma = 0.5", "model.gamma = 0")) .has_value() == false);
  CHECK(code_of(replace(kSinglet, "singlet_on_vacuum", "singlet_knitted_gs")) ==
        ErrorCode::engine_capability);
}

TEST_CASE("grid completeness and determinism") {
  const ScenarioConfig c = parse_config(kSinglet);
  const GridResult a = run(c, 1);
  const GridResult b = run(c, 4);
  // bell_fidelities emits four rows, tangle_deviation two
  CHECK(a.rows.size() == 4 * 5 * 12);
  CHECK(to_csv(a) == to_csv(b));
  CHECK(to_csv(a) == to_csv(run(c, 3)));
  for (std::size_t k = 1; k < a.rows.size(); ++k) {
    const auto& p = a.rows[k - 1];
    const auto& q = a.rows[k];
    const bool ordered = p.measure < q.measure || (p.measure == q.measure && p.x < q.x) ||
                         (p.measure == q.measure && p.x == q.x && p.t < q.t);
    CHECK(ordered);
  }
  // the singlet sits on (1, 2) at t = 0
  const auto m = keyed(a);
  CHECK(m.at("concurrence(1)@1@0") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.at("bell_psi_minus(1)@1@0") == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("csv format") {
  GridResult empty;
  CHECK(to_csv(empty) == "measure,x,t,value\n");
  GridResult one;
  one.rows.push_back({"one_tangle", 3, 0.25, 1.0 / 3.0});
  CHECK(to_csv(one) == "measure,x,t,value\none_tangle,3,0.25,0.333333333333\n");
  CHECK(format_value(-0.0) == "0");
  CHECK(format_value(1e-20) == "1e-20");
  CHECK(format_value(0.1) == "0.1");

  // round trip at 12 significant digits
  const GridResult r = run(parse_config(kSinglet));
  std::istringstream in(to_csv(r));
  std::string line;
  std::getline(in, line);
  std::size_t k = 0;
  while (std::getline(in, line)) {
    const double v = std::stod(line.substr(line.rfind(',') + 1));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.11e", r.rows[k].value);
    CHECK(v == std::stod(buf));
    ++k;
  }
  CHECK(k == r.rows.size());

  const std::string path = "scenario_roundtrip.csv";
  write_csv(r, path);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == to_csv(r));
  std::remove(path.c_str());
  CHECK_THROWS_AS(write_csv(r, "/nonexistent/dir/out.csv"), Error);
}

TEST_CASE("isotropic vacuum is empty") {
  const std::string text = R"(model.lambda = 1
model.gamma = 0
scenario.type = vacuum_only
grid.x_min = -3
grid.x_max = 3
grid.t_min = 0
grid.t_max = 5
grid.dt = 1
measures.list = concurrence(1), concurrence(2), one_tangle, entropy2, tangle_deviation
)";
  for (const auto& row : run(parse_config(text)).rows) CHECK(row.value == 0.0);
}

TEST_CASE("isotropic and general analytic paths agree") {
  const std::string iso = replace(replace(kSinglet, "model.gamma = 0.5", "model.gamma = 0"),
                                  "singlet_on_vacuum", "psi_bell\nscenario.phi = 0.7");
  const std::string general = replace(iso, "model.gamma = 0", "model.gamma = 1e-9");
  const auto a = keyed(run(parse_config(iso)));
  const auto b = keyed(run(parse_config(general)));
  REQUIRE(a.size() == b.size());
  for (const auto& [k, v] : a) CHECK(std::abs(v - b.at(k)) < 1e-7);
}

TEST_CASE("analytic and oracle engines agree on a short window") {
  const std::string text = R"(model.lambda = 0.5
model.gamma = 0.5
scenario.type = singlet_on_vacuum
scenario.i = 1
scenario.j = 2
grid.x_min = 0
grid.x_max = 3
grid.t_min = 0
grid.t_max = 2
grid.dt = 1
measures.list = concurrence(1), concurrence(2), one_tangle, bell_fidelities
engine.type = oracle(12)
)";
  const auto o = keyed(run(parse_config(text)));
  const auto a = keyed(run(parse_config(replace(text, "oracle(12)", "analytic"))));
  REQUIRE(a.size() == o.size());
  for (const auto& [k, v] : a) CHECK(std::abs(v - o.at(k)) < 2e-3);
}

TEST_CASE("ground-state scenarios") {
  const std::string text = R"(model.lambda = 1
model.gamma = 0.5
scenario.type = ground_state_equilibrium
grid.x_min = 0
grid.x_max = 1
grid.t_min = 0
grid.t_max = 1
grid.dt = 1
measures.list = concurrence(1), tangle_deviation, ckw_residual
)";
  const auto m = keyed(run(parse_config(text)));
  CHECK(m.at("concurrence(1)@0@1") == doctest::Approx(0.12851).epsilon(1e-4));
  CHECK(m.at("tangle_deviation@1@0") == 0.0);
  CHECK(m.at("ckw_residual@0@0") > 0.0);
  CHECK(code_of(replace(text, "measures.list", "grid.partner_range = 17\nmeasures.list")) ==
        ErrorCode::config_invalid);
}
