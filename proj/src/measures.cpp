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

#include "xydyn/measures.hpp"

#include <algorithm>
#include <cmath>

#include "xydyn/error.hpp"

namespace xydyn {

namespace {

constexpr double kInputTol = 1e-10;
constexpr double kClampTol = 1e-8;

double clamp_radicand(double r) {
  if (r >= 0.0) return r;
  if (r > -1e-10) return 0.0;
  if (r < -1e-6) fail(ErrorCode::invalid_radicand, "negative radicand " + std::to_string(r));
  return 0.0;
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace

void CorrelatorBundle::validate() const {
  for (double g : {gxx, gyy, gzz, gxy, gyx}) {
    require(std::isfinite(g) && std::abs(g) <= 0.25 + kInputTol, ErrorCode::nonphysical,
            "correlator outside [-1/4, 1/4]");
  }
  for (double m : {mz_l, mz_m}) {
    require(std::isfinite(m) && std::abs(m) <= 0.5 + kInputTol, ErrorCode::nonphysical,
            "magnetization outside [-1/2, 1/2]");
  }
}

TwoSiteDensity::TwoSiteDensity(const Eigen::Matrix4cd& rho, double neg_tol) : rho_(rho) {
  require((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-10, ErrorCode::nonphysical,
          "density matrix is not Hermitian");
  require(std::abs(rho.trace() - cplx(1.0)) < 1e-10, ErrorCode::nonphysical,
          "density matrix trace differs from one");
  const int outside[][2] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  for (const auto& e : outside) {
    require(std::abs(rho(e[0], e[1])) < 1e-10, ErrorCode::nonphysical,
            "density matrix breaks the parity-block structure");
  }
  const Eigen::VectorXd ev = hermitian_eigenvalues(rho);
  if (ev.minCoeff() < -neg_tol) {
    fail(ErrorCode::nonphysical, "density matrix eigenvalue " + std::to_string(ev.minCoeff()));
  }
}

TwoSiteDensity rho2_from_correlators(const CorrelatorBundle& c) {
  c.validate();
  const cplx I(0.0, 1.0);
  Eigen::Matrix4cd r = Eigen::Matrix4cd::Zero();
  r(0, 0) = 0.25 + c.m_z() + c.gzz;
  r(1, 1) = 0.25 - c.gzz + c.ds_z();
  r(2, 2) = 0.25 - c.gzz - c.ds_z();
  r(3, 3) = 0.25 - c.m_z() + c.gzz;
  r(0, 3) = c.gxx - c.gyy - I * (c.gxy + c.gyx);
  r(3, 0) = std::conj(r(0, 3));
  r(1, 2) = c.gxx + c.gyy + I * (c.gxy - c.gyx);
  r(2, 1) = std::conj(r(1, 2));
  return TwoSiteDensity(r, 1e-6);
}

CorrelatorBundle correlators_from_rho2(const TwoSiteDensity& rho) {
  CorrelatorBundle c;
  const cplx cc = rho.c(), zz = rho.z();
  c.gxx = 0.5 * (cc.real() + zz.real());
  c.gyy = 0.5 * (zz.real() - cc.real());
  // c = (gxx - gyy) - i (gxy + gyx), z = (gxx + gyy) + i (gxy - gyx)
  c.gxy = 0.5 * (-cc.imag() + zz.imag());
  c.gyx = 0.5 * (-cc.imag() - zz.imag());
  const double sum = rho.a() - rho.b();        // 2 M_z
  const double diff = rho.x() - rho.y();       // 2 dS_z
  c.mz_l = 0.5 * (sum + diff);
  c.mz_m = 0.5 * (sum - diff);
  c.gzz = 0.25 * (rho.a() + rho.b() - rho.x() - rho.y());
  return c;
}

double concurrence_closed(const CorrelatorBundle& c) {
  c.validate();
  const double outer = std::hypot(c.gxx - c.gyy, c.gxy + c.gyx) -
                       std::sqrt(clamp_radicand(std::pow(0.25 - c.gzz, 2) - c.ds_z() * c.ds_z()));
  const double inner = std::hypot(c.gxx + c.gyy, c.gxy - c.gyx) -
                       std::sqrt(clamp_radicand(std::pow(0.25 + c.gzz, 2) - c.m_z() * c.m_z()));
  return std::min(1.0, 2.0 * std::max({0.0, outer, inner}));
}

double concurrence_wootters(const Eigen::Matrix4cd& rho) {
  // X-shaped matrices: the square roots of the R spectrum are sqrt(ab) +- |c| and
  // sqrt(xy) +- |z| exactly, which avoids square roots of rounding noise at rank deficiency
  bool x_shape = true;
  for (int r = 0; r < 4; ++r)
    for (int q = 0; q < 4; ++q)
      if (r != q && r + q != 3 && rho(r, q) != cplx(0.0, 0.0)) x_shape = false;
  if (x_shape) {
    const double a = rho(0, 0).real(), x = rho(1, 1).real(), y = rho(2, 2).real(),
                 b = rho(3, 3).real();
    if (std::min({a, b, x, y}) < -kClampTol) fail(ErrorCode::nonphysical, "negative population");
    const double c1 = std::abs(rho(0, 3)) - std::sqrt(std::max(0.0, x * y));
    const double c2 = std::abs(rho(1, 2)) - std::sqrt(std::max(0.0, a * b));
    return std::clamp(2.0 * std::max({0.0, c1, c2}), 0.0, 1.0);
  }
  return concurrence_spectral(rho);
}

double concurrence_spectral(const Eigen::Matrix4cd& rho) {
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Eigen::Matrix4cd R = rho * yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(R, false);
  std::vector<double> ev(4);
  for (int q = 0; q < 4; ++q) {
    const double v = es.eigenvalues()(q).real();
    if (v < -kClampTol) fail(ErrorCode::nonphysical, "negative eigenvalue of R");
    ev[q] = std::sqrt(std::max(0.0, v));
  }
  std::sort(ev.begin(), ev.end());
  return std::clamp(ev[3] - ev[2] - ev[1] - ev[0], 0.0, 1.0);
}

double concurrence_iso(double gxx, double gzz, double mz_l, double mz_m, double gxy) {
  const double r = std::pow(0.5 * (1.0 + 4.0 * gzz), 2) - std::pow(mz_l + mz_m, 2);
  return std::clamp(4.0 * std::hypot(gxx, gxy) - std::sqrt(clamp_radicand(r)), 0.0, 1.0);
}

double concurrence_iso(const CorrelatorBundle& c) {
  c.validate();
  if (std::abs(c.gxx - c.gyy) > 1e-10 || std::abs(c.gxy + c.gyx) > 1e-10) {
    fail(ErrorCode::precondition, "state mixes magnetization sectors (outer coherence present)");
  }
  return concurrence_iso(c.gxx, c.gzz, c.mz_l, c.mz_m, c.gxy);
}

double one_site_det(double mz) { return 0.25 - mz * mz; }

double one_tangle(double mz) {
  require(std::abs(mz) <= 0.5 + kInputTol, ErrorCode::nonphysical, "|mz| > 1/2");
  return std::clamp(4.0 * one_site_det(mz), 0.0, 1.0);
}

double binary_entropy(double p) {
  double h = 0.0;
  for (double q : {p, 1.0 - p}) {
    if (q > 0.0) h -= q * std::log2(q);
  }
  return h;
}

double entropy_vn(const Eigen::MatrixXcd& rho) {
  const Eigen::VectorXd ev = hermitian_eigenvalues(rho);
  double s = 0.0;
  for (int q = 0; q < ev.size(); ++q) {
    double p = ev(q);
    if (p < -kClampTol) fail(ErrorCode::nonphysical, "negative density-matrix eigenvalue");
    if (p > 0.0) s -= p * std::log2(p);
  }
  return std::max(0.0, s);
}

double entropy_one_site(double mz) {
  const double tau = one_tangle(mz);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - tau)));
}

BellFidelities bell_fidelities(const Eigen::Matrix4cd& rho) {
  auto overlap = [&](int i, int j, double sign) {
    // <B| rho |B>, B = (|i> + sign |j>) / sqrt 2
    return 0.5 * (rho(i, i).real() + rho(j, j).real() + sign * 2.0 * rho(i, j).real());
  };
  return {overlap(1, 2, -1.0), overlap(1, 2, 1.0), overlap(0, 3, -1.0), overlap(0, 3, 1.0)};
}

double ckw_residual(double tau1, const std::vector<double>& concurrences) {
  double s = 0.0;
  for (double c : concurrences) s += c * c;
  return tau1 - s;
}

TangleDeviation tangle_deviation(double det_rho_site, double det_rho_vacuum) {
  require(det_rho_site >= -kClampTol && det_rho_vacuum >= -kClampTol, ErrorCode::nonphysical,
          "negative determinant");
  const double ds = std::max(0.0, det_rho_site), dv = std::max(0.0, det_rho_vacuum);
  const double delta = 4.0 * (ds - dv);
  const double rel = ds == 0.0 ? 0.0 : 1.0 - dv / ds;
  return {delta, rel};
}

double perturbative_vacuum_concurrence(double t, const ModelParams& p) {
  require(t >= 0.0, ErrorCode::invalid_argument, "time must be >= 0");
  const double s = p.gamma() * p.lambda() * t;
  return std::max(0.0, s - 0.5 * s * s);
}

}  // namespace xydyn
