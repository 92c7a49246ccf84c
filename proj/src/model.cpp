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

#include "xydyn/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "xydyn/error.hpp"
#include "xydyn/quadrature.hpp"

namespace xydyn {

using std::numbers::pi;

ModelParams::ModelParams(double lambda, double gamma, ChainSize size)
    : lambda_(lambda), gamma_(gamma), size_(size) {
  require(std::isfinite(lambda) && lambda >= 0.0, ErrorCode::invalid_argument,
          "lambda must be finite and >= 0");
  require(std::isfinite(gamma) && gamma >= 0.0 && gamma <= 1.0,
          ErrorCode::invalid_argument, "gamma must lie in [0, 1]");
  if (const auto* ring = std::get_if<FiniteRing>(&size_)) {
    require(ring->n_sites >= 4 && ring->n_sites % 2 == 0, ErrorCode::invalid_argument,
            "ring size must be even and >= 4, got " + std::to_string(ring->n_sites));
  }
}

int ModelParams::ring_size() const {
  const auto* ring = std::get_if<FiniteRing>(&size_);
  require(ring != nullptr, ErrorCode::precondition, "model is in the thermodynamic limit");
  return ring->n_sites;
}

Momentum::Momentum(double k) : k_(k) {
  require(std::isfinite(k) && k > -pi - 1e-12 && k <= pi + 1e-12,
          ErrorCode::invalid_argument, "momentum must lie in (-pi, pi]");
}

double band_energy(double k, const ModelParams& p) {
  // 1 + lambda cos k without the cancellation near k = pi at lambda = 1
  const double c = std::cos(0.5 * k);
  return (1.0 - p.lambda()) + 2.0 * p.lambda() * c * c;
}

double pairing(double k, const ModelParams& p) {
  return p.lambda() * p.gamma() * std::sin(k);
}

double dispersion(Momentum k, const ModelParams& p) {
  return std::hypot(band_energy(k.value(), p), pairing(k.value(), p));
}

Bogoliubov bogoliubov(Momentum k, const ModelParams& p) {
  const double eps = band_energy(k.value(), p);
  const double delta = pairing(k.value(), p);
  const double L = std::hypot(eps, delta);
  if (L < 1e-14) {
    fail(ErrorCode::degenerate_momentum, "Lambda_k vanishes (gapless mode at k = pi, lambda = 1)");
  }
  if (delta == 0.0) {
    // continuous limit of the stable form
    return eps > 0.0 ? Bogoliubov{0.0, 1.0} : Bogoliubov{1.0, 0.0};
  }
  // stable form: alpha^2 = (L - eps)/(2L), beta^2 = (L + eps)/(2L), 2 alpha beta = Delta/L
  double a2, b2;
  if (eps >= 0.0) {
    a2 = delta * delta / (2.0 * L * (L + eps));
    b2 = 1.0 - a2;
  } else {
    b2 = delta * delta / (2.0 * L * (L - eps));
    a2 = 1.0 - b2;
  }
  const double alpha = std::sqrt(a2);
  const double beta = std::copysign(std::sqrt(b2), delta);
  return {alpha, beta};
}

double sinc_time(double L, double t) {
  const double x = L * t;
  if (std::abs(x) < 1e-6) return t * (1.0 - x * x / 6.0);
  return std::sin(x) / L;
}

std::vector<double> ring_momenta(int n_sites, RingGrid grid) {
  require(n_sites >= 2 && n_sites % 2 == 0, ErrorCode::invalid_argument,
          "ring size must be even");
  std::vector<double> ks(n_sites);
  for (int n = 0; n < n_sites; ++n) {
    const double shift = grid == RingGrid::antiperiodic ? 0.5 : 0.0;
    double k = 2.0 * pi * (n + shift) / n_sites;
    if (k > pi) k -= 2.0 * pi;
    ks[n] = k;
  }
  return ks;
}

double ring_ground_energy(const ModelParams& p) {
  const int N = p.ring_size();
  auto lam = [&](double k) { return std::hypot(band_energy(k, p), pairing(k, p)); };
  // even parity: antiperiodic momenta, every pair in its lower state
  double even = 0.0;
  for (int n = 0; n < N; ++n) even -= 0.5 * lam(2.0 * pi * (n + 0.5) / N);
  // odd parity: periodic momenta, k = 0 and pi are unpaired with E = -eps (n - 1/2);
  // a broken pair costs Lambda_k
  double paired = 0.0;
  double min_pair = std::numeric_limits<double>::infinity();
  for (int n = 1; n < N / 2; ++n) {
    const double L = lam(2.0 * pi * n / N);
    paired -= L;
    min_pair = std::min(min_pair, L);
  }
  const double e0 = band_energy(0.0, p);
  const double epi = band_energy(pi, p);
  const double odd = paired + std::min(-0.5 * std::abs(e0 - epi),
                                       -0.5 * std::abs(e0 + epi) + min_pair);
  return std::min(even, odd);
}

int light_cone_cutoff(double lambda, double t) {
  return static_cast<int>(std::ceil(lambda * t)) + 30;
}

EvolutionCoefficients::EvolutionCoefficients(double t, int x_max, std::vector<cplx> a,
                                             std::vector<cplx> b)
    : t_(t), x_max_(x_max), a_(std::move(a)), b_(std::move(b)) {}

cplx EvolutionCoefficients::a(int x) const {
  const int ax = std::abs(x);
  require(ax <= x_max_, ErrorCode::out_of_range, "distance beyond x_max");
  return a_[ax];
}

cplx EvolutionCoefficients::b(int x) const {
  const int ax = std::abs(x);
  require(ax <= x_max_, ErrorCode::out_of_range, "distance beyond x_max");
  return x < 0 ? -b_[ax] : b_[ax];
}

double EvolutionCoefficients::weight() const {
  double s = std::norm(a_[0]) + std::norm(b_[0]);
  for (int x = 1; x <= x_max_; ++x) s += 2.0 * (std::norm(a_[x]) + std::norm(b_[x]));
  return s;
}

EvolutionCoefficients evolution_coefficients(int x_max, double t, const ModelParams& p,
                                             RingGrid grid) {
  require(std::isfinite(t) && t >= 0.0, ErrorCode::invalid_argument, "time must be >= 0");
  require(x_max >= 0, ErrorCode::invalid_argument, "x_max must be >= 0");
  std::vector<cplx> a(x_max + 1, 0.0), b(x_max + 1, 0.0);

  // integrand per momentum: a_x += w cos(kx) [cos Lt + i (2 beta^2 - 1) sin Lt]
  //                          b_x += w i sin(kx) 2 alpha beta sin Lt
  auto accumulate = [&](double k, double w) {
    const double eps = band_energy(k, p);
    const double delta = pairing(k, p);
    const double L = std::hypot(eps, delta);
    const double st = sinc_time(L, t);
    const cplx amp(std::cos(L * t), eps * st);  // 2 beta^2 - 1 = eps / L
    const double pair = delta * st;               // 2 alpha beta = Delta / L
    const cplx step(std::cos(k), std::sin(k));
    cplx phase(1.0, 0.0);
    for (int x = 0; x <= x_max; ++x) {
      a[x] += w * phase.real() * amp;
      b[x] += cplx(0.0, w * phase.imag() * pair);
      phase *= step;
    }
  };

  if (p.thermodynamic()) {
    const int panels = oscillatory_panels(p.lambda() * t, x_max);
    const QuadratureRule rule = composite_gauss_legendre(0.0, pi, panels);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      accumulate(rule.nodes[q], rule.weights[q] / pi);
    }
  } else {
    const int N = p.ring_size();
    require(x_max <= N / 2, ErrorCode::out_of_range, "x_max exceeds half the ring");
    for (double k : ring_momenta(N, grid)) accumulate(k, 1.0 / N);
  }

  EvolutionCoefficients out(t, x_max, std::move(a), std::move(b));
  if (p.thermodynamic()) {
    const double tail = 1.0 - out.weight();
    if (tail > 1e-10) {
      fail(ErrorCode::cutoff_too_small,
           "tail weight beyond x_max is " + std::to_string(tail));
    }
  }
  return out;
}

}  // namespace xydyn
