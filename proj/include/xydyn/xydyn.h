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

/* C interface to the xydyn library. Every call returns a status; on failure
   xyd_last_error() describes the most recent error on the calling thread. */
#ifndef XYDYN_XYDYN_H
#define XYDYN_XYDYN_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(XYDYN_BUILDING)
#    define XYD_API __declspec(dllexport)
#  else
#    define XYD_API __declspec(dllimport)
#  endif
#else
#  define XYD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum xyd_status {
  XYD_OK = 0,
  XYD_INVALID_ARGUMENT = 1,
  XYD_CONFIG = 2,       /* malformed config or unsupported scenario/engine pair */
  XYD_NUMERICAL = 3,    /* quadrature, cutoff or health check failed */
  XYD_UNSUPPORTED = 4,  /* engine capability */
  XYD_IO = 5,
  XYD_INTERNAL = 6
} xyd_status;

typedef enum xyd_engine { XYD_ENGINE_ANALYTIC = 0, XYD_ENGINE_ORACLE = 1 } xyd_engine;

typedef struct xyd_config xyd_config;
typedef struct xyd_result xyd_result;

XYD_API const char* xyd_version(void);
/* message of the last failed call on this thread, "" if none */
XYD_API const char* xyd_last_error(void);

XYD_API xyd_status xyd_config_load(const char* path, xyd_config** out);
XYD_API xyd_status xyd_config_parse(const char* text, xyd_config** out);
/* n_sites is used by the oracle engine only; pass 0 to keep the configured size */
XYD_API xyd_status xyd_config_set_engine(xyd_config* cfg, xyd_engine engine, int n_sites);
XYD_API void xyd_config_destroy(xyd_config* cfg);

XYD_API xyd_status xyd_run(const xyd_config* cfg, int threads, xyd_result** out);
XYD_API void xyd_result_destroy(xyd_result* res);
XYD_API size_t xyd_result_rows(const xyd_result* res);
/* measure points into the result and lives as long as it */
XYD_API xyd_status xyd_result_row(const xyd_result* res, size_t index, const char** measure,
                                  int* x, double* t, double* value);
XYD_API xyd_status xyd_result_write_csv(const xyd_result* res, const char* path);
/* caller releases the string with xyd_string_free */
XYD_API xyd_status xyd_result_to_csv(const xyd_result* res, char** out);
XYD_API void xyd_string_free(char* s);

typedef void (*xyd_selftest_callback)(const char* name, int passed, double deviation,
                                      double tolerance, void* user);
/* *failures receives the number of failed cases; callback may be NULL */
XYD_API xyd_status xyd_selftest(xyd_selftest_callback cb, void* user, int* failures);

/* direct numerics */
XYD_API xyd_status xyd_bessel_j(int n, double x, double* out);
XYD_API xyd_status xyd_gs_concurrence(double lambda, double gamma, int d, double* out);
/* dim x dim row-major complex skew matrix as interleaved (re, im) pairs */
XYD_API xyd_status xyd_pfaffian(const double* entries, int dim, double* re, double* im);
XYD_API xyd_status xyd_concurrence_from_correlators(double gxx, double gyy, double gzz,
                                                    double gxy, double gyx, double mz_l,
                                                    double mz_m, double* out);

#ifdef __cplusplus
}
#endif

#endif
