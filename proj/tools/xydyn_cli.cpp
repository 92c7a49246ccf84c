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

// Command line front end; talks to the library through its C interface only.
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "xydyn/xydyn.h"

namespace {

int exit_code(xyd_status s) {
  switch (s) {
    case XYD_OK:
      return 0;
    case XYD_CONFIG:
    case XYD_UNSUPPORTED:
    case XYD_INVALID_ARGUMENT:
      return 2;
    case XYD_NUMERICAL:
      return 3;
    default:
      return 1;
  }
}

int report(xyd_status s) {
  std::cerr << "xydyn: " << xyd_last_error() << '\n';
  return exit_code(s);
}

void print_case(const char* name, int passed, double deviation, double tolerance, void*) {
  std::printf("%-20s %s  deviation %.3e  tolerance %.1e\n", name, passed ? "ok  " : "FAIL",
              deviation, tolerance);
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement dynamics of the XY spin chain"};
  app.set_version_flag("--version", std::string(xyd_version()));
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "sweep a scenario grid and write CSV");
  std::string config_path, out_path, engine;
  int threads = 1;
  run->add_option("config", config_path, "config file")->required();
  run->add_option("--out", out_path, "CSV destination (stdout if absent)");
  run->add_option("--engine", engine, "override engine.type")
      ->check(CLI::IsMember({"analytic", "oracle"}));
  run->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 1024));

  auto* self = app.add_subcommand("selftest", "run the oracle-equivalence suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (self->parsed()) {
    int failures = 0;
    const xyd_status s = xyd_selftest(print_case, nullptr, &failures);
    if (s != XYD_OK) return report(s);
    if (failures > 0) {
      std::cerr << "xydyn: " << failures << " selftest case(s) failed\n";
      return 3;
    }
    return 0;
  }

  xyd_config* cfg = nullptr;
  xyd_status s = xyd_config_load(config_path.c_str(), &cfg);
  if (s != XYD_OK) return report(s);
  if (!engine.empty()) {
    s = xyd_config_set_engine(cfg, engine == "oracle" ? XYD_ENGINE_ORACLE : XYD_ENGINE_ANALYTIC, 0);
    if (s != XYD_OK) {
      xyd_config_destroy(cfg);
      return report(s);
    }
  }
  xyd_result* res = nullptr;
  s = xyd_run(cfg, threads, &res);
  xyd_config_destroy(cfg);
  if (s != XYD_OK) return report(s);

  if (!out_path.empty()) {
    s = xyd_result_write_csv(res, out_path.c_str());
  } else {
    char* text = nullptr;
    s = xyd_result_to_csv(res, &text);
    if (s == XYD_OK) {
      std::fputs(text, stdout);
      xyd_string_free(text);
    }
  }
  xyd_result_destroy(res);
  if (s != XYD_OK) return report(s);
  return 0;
}
