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

#include <functional>
#include <vector>

namespace xydyn {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule of the given order on [-1, 1]
const QuadratureRule& gauss_legendre(int order);

// composite rule on [a, b] with equal panels
QuadratureRule composite_gauss_legendre(double a, double b, int panels, int order = 10);

// panel count for integrands oscillating like cos(k x) e^{i Lambda t} on [0, pi]
int oscillatory_panels(double lambda_t, int x_max, double panels_per_unit = 8.0);

// adaptive bisection comparing orders 10 and 20 on each interval
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-13, int max_depth = 40);

}  // namespace xydyn
