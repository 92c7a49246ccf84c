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

#include "xydyn/groundstate.hpp"

#include <cmath>
#include <numbers>

#include "xydyn/error.hpp"
#include "xydyn/quadrature.hpp"

namespace xydyn {

using std::numbers::pi;

namespace {

// eps/Lambda and Delta/Lambda; the gapless point is a removable discontinuity
std::pair<double, double> filling(double k, const ModelParams& p) {
  const double eps = band_energy(k, p), delta = pairing(k, p);
  const double L = std::hypot(eps, delta);
  if (L == 0.0) return {0.0, 0.0};
  return {eps / L, delta / L};
}

}  // namespace

GroundStateContraction::GroundStateContraction(const ModelParams& p, int r_max)
    : p_(p), r_max_(r_max), g_(2 * static_cast<std::size_t>(r_max) + 1, 0.0) {
  require(r_max >= 0, ErrorCode::invalid_argument, "r_max must be >= 0");
  if (!p.thermodynamic()) {
    const int N = p.ring_size();
    const std::vector<double> ks = ring_momenta(N, RingGrid::antiperiodic);
    for (int r = -r_max; r <= r_max; ++r) {
      double s = 0.0;
      for (double k : ks) {
        const auto [e, d] = filling(k, p);
        s += std::cos(k * r) * e - std::sin(k * r) * d;
      }
      g_[r + r_max] = s / N;
    }
    return;
  }
  // split where eps changes sign, where the integrand has a kink or a jump at small gamma
  std::vector<double> cuts{0.0};
  if (p.lambda() > 1.0) cuts.push_back(std::acos(-1.0 / p.lambda()));
  cuts.push_back(pi);
  for (int r = -r_max; r <= r_max; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      s += integrate_adaptive(
          [&](double k) {
            const auto [e, d] = filling(k, p);
            return std::cos(k * r) * e - std::sin(k * r) * d;
          },
          cuts[c], cuts[c + 1], 1e-13);
    }
    g_[r + r_max] = s / pi;
  }
}

double GroundStateContraction::operator()(int r) const {
  require(std::abs(r) <= r_max_, ErrorCode::window_underflow, "distance beyond the table");
  return g_[r + r_max_];
}

double gs_contraction(int r, const ModelParams& p) {
  return GroundStateContraction(p, std::abs(r))(r);
}

GroundStateCorrelators gs_correlators(int d, const GroundStateContraction& g) {
  require(d >= 1 && d <= g.r_max() - 1, ErrorCode::invalid_argument,
          "distance must satisfy 1 <= d < table radius");
  Eigen::MatrixXd tx(d, d), ty(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      tx(i, j) = g(i - j - 1);
      ty(i, j) = g(i - j + 1);
    }
  }
  GroundStateCorrelators out;
  out.gxx = 0.25 * tx.determinant();
  out.gyy = 0.25 * ty.determinant();
  out.gzz = 0.25 * (g(0) * g(0) - g(d) * g(-d));
  out.mz = 0.5 * g(0);
  return out;
}

GroundStateCorrelators gs_correlators(int d, const ModelParams& p) {
  return gs_correlators(d, GroundStateContraction(p, d + 1));
}

CorrelatorBundle gs_bundle(int d, const ModelParams& p) {
  const GroundStateCorrelators g = gs_correlators(d, p);
  CorrelatorBundle b;
  b.gxx = g.gxx;
  b.gyy = g.gyy;
  b.gzz = g.gzz;
  b.mz_l = g.mz;
  b.mz_m = g.mz;
  return b;
}

double gs_concurrence(int d, const ModelParams& p) {
  require(d >= 1 && d <= kGroundStateMaxDistance, ErrorCode::invalid_argument,
          "ground-state concurrence distance must lie in [1, 16]");
  return concurrence_closed(gs_bundle(d, p));
}

ContractionSet gs_contractions(int lo, int hi, const ModelParams& p) {
  require(hi >= lo, ErrorCode::invalid_argument, "empty window");
  const int n = hi - lo + 1;
  const GroundStateContraction g(p, n);
  Eigen::MatrixXcd vac = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int l = 0; l < n; ++l) {
    vac(2 * l, 2 * l) = 1.0;
    vac(2 * l + 1, 2 * l + 1) = -1.0;
    for (int m = 0; m < n; ++m) {
      vac(2 * l, 2 * m + 1) = -g(m - l);
      vac(2 * m + 1, 2 * l) = g(m - l);
    }
  }
  const Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(2 * n);
  return ContractionSet(VacuumTag{}, 0.0, lo, hi, std::move(vac), zero, zero);
}

TangleSum gs_tangle_sum_check(const ModelParams& p, int window) {
  require(window >= 1 && window <= kGroundStateMaxDistance, ErrorCode::invalid_argument,
          "window must lie in [1, 16]");
  // a ring has N - 1 partners, distance d and N - d alike
  const int half = p.thermodynamic() ? window : p.ring_size() / 2;
  require(half <= kGroundStateMaxDistance, ErrorCode::size_exceeded, "ring too large for the sum");
  const GroundStateContraction g(p, half + 1);
  TangleSum out{one_tangle(0.5 * g(0)), 0.0};
  for (int d = 1; d <= half; ++d) {
    const GroundStateCorrelators c = gs_correlators(d, g);
    CorrelatorBundle b;
    b.gxx = c.gxx;
    b.gyy = c.gyy;
    b.gzz = c.gzz;
    b.mz_l = b.mz_m = c.mz;
    const double C = concurrence_closed(b);
    const bool antipode = !p.thermodynamic() && 2 * d == p.ring_size();
    out.sum_c_squared += (antipode ? 1.0 : 2.0) * C * C;
  }
  return out;
}

}  // namespace xydyn
