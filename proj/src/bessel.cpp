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

#include "xydyn/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "xydyn/error.hpp"

namespace xydyn {

namespace {

void check_range(int n, double x) {
  if (std::abs(n) > kBesselMaxOrder || !(x >= 0.0) || x > kBesselMaxArgument) {
    fail(ErrorCode::out_of_range,
         "bessel_j supports |n| <= 2000 and 0 <= x <= 2000, got n=" + std::to_string(n) +
             " x=" + std::to_string(x));
  }
}

}  // namespace

std::vector<double> bessel_sequence(int n_max, double x) {
  check_range(n_max, x);
  require(n_max >= 0, ErrorCode::out_of_range, "bessel_sequence needs n_max >= 0");
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }
  // Miller: start well above max(n, x); the turning-point region is ~x^(1/3) wide
  const double top = std::max(static_cast<double>(n_max), x);
  int start = static_cast<int>(top + 20.0 + 15.0 * std::cbrt(std::max(x, 1.0)));
  start += start % 2;

  double next = 0.0;  // J_{k+1}
  double cur = 1e-30;  // J_k
  double sum = 0.0;
  for (int k = start; k >= 1; --k) {
    if (k <= n_max) out[k] = cur;
    if (k % 2 == 0) sum += 2.0 * cur;
    const double prev = 2.0 * k / x * cur - next;
    next = cur;
    cur = prev;
    if (std::abs(cur) > 1e250) {
      cur *= 1e-250;
      next *= 1e-250;
      sum *= 1e-250;
      for (int m = k; m <= n_max; ++m) out[m] *= 1e-250;
    }
  }
  out[0] = cur;
  sum += cur;
  for (double& v : out) v /= sum;
  return out;
}

double bessel_j(int n, double x) {
  check_range(n, x);
  const int m = std::abs(n);
  const double v = bessel_sequence(m, x)[m];
  return (n < 0 && m % 2 == 1) ? -v : v;
}

std::vector<double> bessel_table(int n_max, double x) {
  const std::vector<double> seq = bessel_sequence(n_max, x);
  std::vector<double> out(2 * static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    out[n_max + n] = seq[n];
    out[n_max - n] = (n % 2 == 1) ? -seq[n] : seq[n];
  }
  return out;
}

}  // namespace xydyn
