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

#include "xydyn/xydyn.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "xydyn/bessel.hpp"
#include "xydyn/error.hpp"
#include "xydyn/groundstate.hpp"
#include "xydyn/measures.hpp"
#include "xydyn/pfaffian.hpp"
#include "xydyn/scenario.hpp"
#include "xydyn/selftest.hpp"

struct xyd_config {
  xydyn::ScenarioConfig cfg;
};

struct xyd_result {
  xydyn::GridResult res;
};

namespace {

thread_local std::string last_error;

xyd_status status_of(xydyn::ErrorCode c) {
  using xydyn::ErrorCode;
  switch (c) {
    case ErrorCode::config_invalid:
      return XYD_CONFIG;
    case ErrorCode::engine_capability:
      return XYD_UNSUPPORTED;
    case ErrorCode::io_failure:
      return XYD_IO;
    case ErrorCode::degenerate_momentum:
    case ErrorCode::cutoff_too_small:
    case ErrorCode::quadrature_failure:
    case ErrorCode::window_underflow:
    case ErrorCode::nonphysical:
    case ErrorCode::invalid_radicand:
    case ErrorCode::numerical_health:
      return XYD_NUMERICAL;
    default:
      return XYD_INVALID_ARGUMENT;
  }
}

template <class F>
xyd_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return XYD_OK;
  } catch (const xydyn::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return XYD_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return XYD_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return XYD_INTERNAL;
  }
}

xyd_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return XYD_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* xyd_version(void) { return XYDYN_VERSION; }

const char* xyd_last_error(void) { return last_error.c_str(); }

xyd_status xyd_config_load(const char* path, xyd_config** out) {
  if (!path || !out) return null_arg("path/out");
  *out = nullptr;
  return guarded([&] { *out = new xyd_config{xydyn::load_config(path)}; });
}

xyd_status xyd_config_parse(const char* text, xyd_config** out) {
  if (!text || !out) return null_arg("text/out");
  *out = nullptr;
  return guarded([&] { *out = new xyd_config{xydyn::parse_config(text)}; });
}

xyd_status xyd_config_set_engine(xyd_config* cfg, xyd_engine engine, int n_sites) {
  if (!cfg) return null_arg("cfg");
  return guarded([&] {
    xydyn::ScenarioConfig next = cfg->cfg;
    if (engine == XYD_ENGINE_ANALYTIC) {
      next.engine = xydyn::EngineType::analytic;
    } else if (engine == XYD_ENGINE_ORACLE) {
      next.engine = xydyn::EngineType::oracle;
    } else {
      xydyn::fail(xydyn::ErrorCode::invalid_argument, "unknown engine");
    }
    if (n_sites != 0) next.n_sites = n_sites;
    next.validate();
    cfg->cfg = next;
  });
}

void xyd_config_destroy(xyd_config* cfg) { delete cfg; }

xyd_status xyd_run(const xyd_config* cfg, int threads, xyd_result** out) {
  if (!cfg || !out) return null_arg("cfg/out");
  *out = nullptr;
  return guarded([&] { *out = new xyd_result{xydyn::run(cfg->cfg, threads)}; });
}

void xyd_result_destroy(xyd_result* res) { delete res; }

size_t xyd_result_rows(const xyd_result* res) { return res ? res->res.rows.size() : 0; }

xyd_status xyd_result_row(const xyd_result* res, size_t index, const char** measure, int* x,
                          double* t, double* value) {
  if (!res) return null_arg("res");
  if (index >= res->res.rows.size()) {
    last_error = "row index out of range";
    return XYD_INVALID_ARGUMENT;
  }
  const auto& r = res->res.rows[index];
  if (measure) *measure = r.measure.c_str();
  if (x) *x = r.x;
  if (t) *t = r.t;
  if (value) *value = r.value;
  last_error.clear();
  return XYD_OK;
}

xyd_status xyd_result_write_csv(const xyd_result* res, const char* path) {
  if (!res || !path) return null_arg("res/path");
  return guarded([&] { xydyn::write_csv(res->res, std::string(path)); });
}

xyd_status xyd_result_to_csv(const xyd_result* res, char** out) {
  if (!res || !out) return null_arg("res/out");
  *out = nullptr;
  return guarded([&] {
    const std::string s = xydyn::to_csv(res->res);
    char* buf = new char[s.size() + 1];
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out = buf;
  });
}

void xyd_string_free(char* s) { delete[] s; }

xyd_status xyd_selftest(xyd_selftest_callback cb, void* user, int* failures) {
  return guarded([&] {
    int failed = 0;
    xydyn::run_selftests([&](const xydyn::SelfTestCase& c) {
      if (!c.passed) ++failed;
      if (cb) cb(c.name.c_str(), c.passed ? 1 : 0, c.deviation, c.tolerance, user);
    });
    if (failures) *failures = failed;
  });
}

xyd_status xyd_bessel_j(int n, double x, double* out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = xydyn::bessel_j(n, x); });
}

xyd_status xyd_gs_concurrence(double lambda, double gamma, int d, double* out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = xydyn::gs_concurrence(d, xydyn::ModelParams(lambda, gamma)); });
}

xyd_status xyd_pfaffian(const double* entries, int dim, double* re, double* im) {
  if (!entries || !re || !im) return null_arg("entries/re/im");
  return guarded([&] {
    xydyn::require(dim >= 0 && dim <= 4096, xydyn::ErrorCode::invalid_argument, "bad dimension");
    Eigen::MatrixXcd m(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        const std::size_t k = 2 * (static_cast<std::size_t>(r) * dim + c);
        m(r, c) = {entries[k], entries[k + 1]};
      }
    const xydyn::cplx pf = xydyn::pfaffian(xydyn::SkewMatrix::from_dense(m));
    *re = pf.real();
    *im = pf.imag();
  });
}

xyd_status xyd_concurrence_from_correlators(double gxx, double gyy, double gzz, double gxy,
                                            double gyx, double mz_l, double mz_m, double* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    xydyn::CorrelatorBundle b;
    b.gxx = gxx;
    b.gyy = gyy;
    b.gzz = gzz;
    b.gxy = gxy;
    b.gyx = gyx;
    b.mz_l = mz_l;
    b.mz_m = mz_m;
    *out = xydyn::concurrence_closed(b);
  });
}

}  // extern "C"
