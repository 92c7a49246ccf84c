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

#include <vector>

#include "xydyn/correlators.hpp"
#include "xydyn/measures.hpp"
#include "xydyn/model.hpp"

namespace xydyn {

inline constexpr int kGroundStateMaxDistance = 16;

// G(r) = -<A_l B_{l+r}> in the ground state, tabulated for |r| <= r_max.
// Thermodynamic limit by adaptive quadrature, finite rings by the antiperiodic momentum sum.
class GroundStateContraction {
 public:
  GroundStateContraction(const ModelParams& p, int r_max);

  const ModelParams& params() const { return p_; }
  int r_max() const { return r_max_; }
  double operator()(int r) const;

 private:
  ModelParams p_;
  int r_max_;
  std::vector<double> g_;  // index r + r_max
};

double gs_contraction(int r, const ModelParams& p);

struct GroundStateCorrelators {
  double gxx, gyy, gzz, mz;
};

// Toeplitz determinants of G for sites at distance d
GroundStateCorrelators gs_correlators(int d, const GroundStateContraction& g);
GroundStateCorrelators gs_correlators(int d, const ModelParams& p);

CorrelatorBundle gs_bundle(int d, const ModelParams& p);

double gs_concurrence(int d, const ModelParams& p);

// ground-state contractions as a ContractionSet, for the Pfaffian route
ContractionSet gs_contractions(int lo, int hi, const ModelParams& p);

struct TangleSum {
  double tau1;
  double sum_c_squared;  // 2 sum_{d=1..window} C_d^2, both sides of the site
};

// finite rings ignore the window and sum over all N - 1 partners
TangleSum gs_tangle_sum_check(const ModelParams& p, int window);

}  // namespace xydyn
