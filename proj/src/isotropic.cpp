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

#include "xydyn/isotropic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "xydyn/bessel.hpp"
#include "xydyn/error.hpp"
#include "xydyn/measures.hpp"

namespace xydyn {

namespace {

cplx ipow(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// J_n(x) for |n| <= n_max from one downward sweep
class BesselRow {
 public:
  BesselRow(int n_max, double x) : n_max_(n_max), v_(bessel_table(n_max, x)) {}
  double operator()(int n) const {
    if (n < -n_max_ || n > n_max_) return 0.0;
    return v_[static_cast<std::size_t>(n + n_max_)];
  }

 private:
  int n_max_;
  std::vector<double> v_;
};

double wrap_phase(double a) {
  double r = std::fmod(a, 2.0 * std::numbers::pi);
  if (r < 0) r += 2.0 * std::numbers::pi;
  if (r >= 2.0 * std::numbers::pi - 1e-15) r = 0.0;
  return r;
}

void check_common(int i, int j, double t, double lambda) {
  require(i != j, ErrorCode::invalid_argument, "source sites must differ");
  require(t >= 0.0 && std::isfinite(t), ErrorCode::invalid_argument, "time must be >= 0");
  require(std::isfinite(lambda), ErrorCode::invalid_argument, "lambda must be finite");
}

}  // namespace

SingleParticleState::SingleParticleState(int i, int j, double phi, double t, double lambda,
                                         int lo, std::vector<cplx> amps)
    : i_(i), j_(j), phi_(phi), t_(t), lambda_(lambda), lo_(lo), w_(std::move(amps)) {}

cplx SingleParticleState::w(int l) const {
  if (l < lo_ || l > hi()) return {0.0, 0.0};
  return w_[static_cast<std::size_t>(l - lo_)];
}

double SingleParticleState::norm() const {
  double s = 0;
  for (const auto& v : w_) s += std::norm(v);
  return s;
}

SingleParticleState SingleParticleState::rephased(double alpha) const {
  std::vector<cplx> w = w_;
  const cplx u = std::polar(1.0, alpha);
  for (auto& v : w) v *= u;
  return SingleParticleState(i_, j_, phi_, t_, lambda_, lo_, std::move(w));
}

SingleParticleState wavepacket(int i, int j, double phi, double t, double lambda) {
  check_common(i, j, t, lambda);
  const double x = lambda * t;
  const int reach = static_cast<int>(std::ceil(std::abs(x))) + 30;
  const int lo = std::min(i, j) - reach;
  const int hi = std::max(i, j) + reach;
  const BesselRow jn(hi - lo, x);
  const cplx e = std::polar(1.0, phi);
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<cplx> w;
  w.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int l = lo; l <= hi; ++l)
    w.push_back(s * (ipow(l - i) * jn(l - i) + e * ipow(l - j) * jn(l - j)));
  return SingleParticleState(i, j, phi, t, lambda, lo, std::move(w));
}

double concurrence_psi(const SingleParticleState& s, int n, int m) {
  require(n != m, ErrorCode::invalid_argument, "sites must differ");
  return 2.0 * std::abs(s.w(n) * std::conj(s.w(m)));
}

double self_concurrence(int x, double phi, double t, double lambda) {
  require(x >= 1, ErrorCode::invalid_argument, "separation must be >= 1");
  require(t >= 0.0, ErrorCode::invalid_argument, "time must be >= 0");
  const double arg = lambda * t;
  const double j0 = bessel_j(0, arg);
  const double jx = bessel_j(x, arg);
  const cplx v = j0 * j0 + 2.0 * ipow(x) * j0 * jx * std::cos(phi) + ((x % 2) ? -1.0 : 1.0) * jx * jx;
  return std::abs(v);
}

double two_site_entropy(const SingleParticleState& s, int n, int m) {
  require(n != m, ErrorCode::invalid_argument, "sites must differ");
  return binary_entropy(std::min(1.0, std::norm(s.w(n)) + std::norm(s.w(m))));
}

double block_entropy(const SingleParticleState& s, const std::vector<int>& sites) {
  std::vector<int> sorted = sites;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          ErrorCode::invalid_argument, "block sites must be distinct");
  double p = 0;
  for (int l : sorted) p += std::norm(s.w(l));
  return binary_entropy(std::min(1.0, p));
}

double fidelity_psi(const SingleParticleState& s, int n, int m, double phi_ref) {
  require(n != m, ErrorCode::invalid_argument, "sites must differ");
  return 0.5 * std::norm(s.w(n) + std::polar(1.0, -phi_ref) * s.w(m));
}

CkwPair ckw_pair(const SingleParticleState& s, int j) {
  const double pj = std::norm(s.w(j));
  double sum = 0;
  for (int l = s.lo(); l <= s.hi(); ++l)
    if (l != j) sum += 4.0 * pj * std::norm(s.w(l));
  return {4.0 * pj * (1.0 - pj), sum};
}

double total_concurrence(const SingleParticleState& s, int n) {
  double sum = 0;
  for (int l = s.lo(); l <= s.hi(); ++l)
    if (l != n) sum += std::abs(s.w(l));
  return 2.0 * std::abs(s.w(n)) * sum;
}

Eigen::Matrix4cd one_particle_rho2(const SingleParticleState& s, int n, int m) {
  require(n != m, ErrorCode::invalid_argument, "sites must differ");
  const cplx wn = s.w(n), wm = s.w(m);
  Eigen::Matrix4cd r = Eigen::Matrix4cd::Zero();
  // basis (uu, ud, du, dd), first site n
  r(1, 1) = std::norm(wn);
  r(2, 2) = std::norm(wm);
  r(1, 2) = wn * std::conj(wm);
  r(2, 1) = std::conj(r(1, 2));
  r(3, 3) = std::max(0.0, 1.0 - r(1, 1).real() - r(2, 2).real());
  return r;
}

PhiStateCoefficients phi_state_coefficients(int i, int j, int n, int m, double t, double lambda,
                                            double phi) {
  check_common(i, j, t, lambda);
  require(n < m, ErrorCode::invalid_argument, "pair must satisfy n < m");
  // the initial state is symmetric in (i, j)
  if (i > j) std::swap(i, j);
  const int span = std::max({std::abs(n - i), std::abs(n - j), std::abs(m - i), std::abs(m - j)});
  const BesselRow jn(span, lambda * t);
  const double ni = jn(n - i), nj = jn(n - j), mi = jn(m - i), mj = jn(m - j);

  PhiStateCoefficients c{};
  c.n = n;
  c.m = m;
  c.i = i;
  c.j = j;
  c.phi = phi;
  c.t = t;
  c.lambda = lambda;
  c.r_c = ni * mj - mi * nj;
  c.a = 0.5 * c.r_c * c.r_c;
  c.x = 0.5 * (ni * ni + nj * nj - c.r_c * c.r_c);
  c.y = 0.5 * (mi * mi + mj * mj - c.r_c * c.r_c);
  c.b = 1.0 - c.a - c.x - c.y;
  double interior = 0;
  for (int r = n + 1; r < m; ++r) {
    const double ri = jn(r - i), rj = jn(r - j);
    interior += (ni * rj - ri * nj) * (mi * rj - ri * mj);
  }
  c.r_z = ni * mi + nj * mj - 2.0 * interior;
  c.z = 0.5 * ipow(n - m) * c.r_z;
  c.c = 0.5 * std::polar(1.0, phi + 2.0 * t) * ipow(n + m - i - j) * c.r_c;
  return c;
}

cplx PhiStateCoefficients::c_rotating() const { return c * std::polar(1.0, -2.0 * t); }

Eigen::Matrix4cd PhiStateCoefficients::rho2() const {
  Eigen::Matrix4cd r = Eigen::Matrix4cd::Zero();
  r(0, 0) = a;
  r(1, 1) = x;
  r(2, 2) = y;
  r(3, 3) = b;
  r(0, 3) = c;
  r(3, 0) = std::conj(c);
  r(1, 2) = z;
  r(2, 1) = std::conj(z);
  return r;
}

BranchedConcurrence concurrence_phi(const PhiStateCoefficients& c) {
  const double c1 = c.c_abs() - std::sqrt(std::max(0.0, c.x * c.y));
  const double c2 = c.z_abs() - std::sqrt(std::max(0.0, c.a * c.b));
  if (c1 <= 0 && c2 <= 0) return {0.0, ConcurrenceBranch::none};
  if (c1 >= c2) return {2.0 * c1, ConcurrenceBranch::phi_like};
  return {2.0 * c2, ConcurrenceBranch::psi_like};
}

double phi_fidelity(const PhiStateCoefficients& c, double phi_ref) {
  return 0.5 * (c.a + c.b) + (std::polar(1.0, -phi_ref) * c.c_rotating()).real();
}

double psi_fidelity(const PhiStateCoefficients& c, double phi_ref) {
  return 0.5 * (c.x + c.y) + (std::polar(1.0, phi_ref) * c.z).real();
}

OptimalPhases optimal_phases(int n, int m, int i, int j, double phi) {
  const double h = 0.5 * std::numbers::pi;
  return {wrap_phase(phi + h * (n + m - i - j)), wrap_phase(h * (m - n))};
}

}  // namespace xydyn
