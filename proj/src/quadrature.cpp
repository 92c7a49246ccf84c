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

#include "xydyn/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

#include "xydyn/error.hpp"

namespace xydyn {

namespace {

QuadratureRule build_rule(int order) {
  QuadratureRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= order; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      dp = order * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[order - 1 - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const QuadratureRule& gauss_legendre(int order) {
  require(order >= 1 && order <= 200, ErrorCode::invalid_argument, "quadrature order");
  static std::mutex mu;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_rule(order)).first;
  return it->second;
}

QuadratureRule composite_gauss_legendre(double a, double b, int panels, int order) {
  require(panels >= 1, ErrorCode::invalid_argument, "panel count must be positive");
  const QuadratureRule& base = gauss_legendre(order);
  QuadratureRule out;
  out.nodes.reserve(static_cast<std::size_t>(panels) * order);
  out.weights.reserve(out.nodes.capacity());
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (int i = 0; i < order; ++i) {
      out.nodes.push_back(mid + 0.5 * h * base.nodes[i]);
      out.weights.push_back(0.5 * h * base.weights[i]);
    }
  }
  return out;
}

int oscillatory_panels(double lambda_t, int x_max, double panels_per_unit) {
  constexpr int kPanelCap = 400000;
  const double n = std::ceil(panels_per_unit * (1.0 + std::abs(lambda_t) + std::abs(x_max)));
  if (!(n <= kPanelCap)) {
    fail(ErrorCode::quadrature_failure, "required panel count exceeds the cap");
  }
  return static_cast<int>(n);
}

namespace {

struct Estimate {
  double value;
  double magnitude;  // integral of |f|, sets the rounding floor
};

Estimate fixed(const std::function<double(double)>& f, double a, double b, int order) {
  const QuadratureRule& r = gauss_legendre(order);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0, m = 0.0;
  for (int i = 0; i < order; ++i) {
    const double v = r.weights[i] * f(mid + half * r.nodes[i]);
    s += v;
    m += std::abs(v);
  }
  return {s * half, m * std::abs(half)};
}

double adapt(const std::function<double(double)>& f, double a, double b, double tol,
             int depth) {
  const Estimate coarse = fixed(f, a, b, 10);
  const Estimate fine = fixed(f, a, b, 20);
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * fine.magnitude;
  if (std::abs(fine.value - coarse.value) <= std::max(tol, floor)) return fine.value;
  if (depth <= 0) fail(ErrorCode::quadrature_failure, "adaptive quadrature did not converge");
  const double m = 0.5 * (a + b);
  return adapt(f, a, m, 0.5 * tol, depth - 1) + adapt(f, m, b, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, int max_depth) {
  return adapt(f, a, b, tol, max_depth);
}

}  // namespace xydyn
