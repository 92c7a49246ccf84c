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

#include <Eigen/Dense>
#include <vector>

#include "xydyn/model.hpp"

namespace xydyn {

// spin-1/2 expectation values for a site pair (l, m)
struct CorrelatorBundle {
  double gxx = 0.0, gyy = 0.0, gzz = 0.0, gxy = 0.0, gyx = 0.0;
  double mz_l = 0.0, mz_m = 0.0;

  double m_z() const { return 0.5 * (mz_l + mz_m); }
  double ds_z() const { return 0.5 * (mz_l - mz_m); }
  // |g| <= 1/4 and |mz| <= 1/2 within 1e-10
  void validate() const;
};

// 4x4 density matrix in the basis (uu, ud, du, dd), outer block (a, c; c*, b),
// inner block (x, z; z*, y)
class TwoSiteDensity {
 public:
  // checks Hermiticity, unit trace, the parity-block zero pattern and positivity
  explicit TwoSiteDensity(const Eigen::Matrix4cd& rho, double neg_tol = 1e-8);

  const Eigen::Matrix4cd& matrix() const { return rho_; }
  double a() const { return rho_(0, 0).real(); }
  double x() const { return rho_(1, 1).real(); }
  double y() const { return rho_(2, 2).real(); }
  double b() const { return rho_(3, 3).real(); }
  cplx c() const { return rho_(0, 3); }
  cplx z() const { return rho_(1, 2); }

 private:
  Eigen::Matrix4cd rho_;
};

TwoSiteDensity rho2_from_correlators(const CorrelatorBundle& c);
CorrelatorBundle correlators_from_rho2(const TwoSiteDensity& rho);

double concurrence_closed(const CorrelatorBundle& c);
// Wootters eigenvalue route, valid for any two-qubit density matrix
double concurrence_wootters(const Eigen::Matrix4cd& rho);
// the eigenvalue route alone, without the closed form for X-shaped matrices
double concurrence_spectral(const Eigen::Matrix4cd& rho);
// number-conserving states: max{0, 4 sqrt(gxx^2 + gxy^2) - sqrt(((1+4gzz)/2)^2 - (mz_l+mz_m)^2)}
double concurrence_iso(double gxx, double gzz, double mz_l, double mz_m, double gxy = 0.0);
// rejects bundles with a nonzero outer coherence (gxx != gyy or gxy != -gyx)
double concurrence_iso(const CorrelatorBundle& c);

double one_tangle(double mz);
// det rho1 = 1/4 - mz^2
double one_site_det(double mz);

// von Neumann entropy in bits of a Hermitian density matrix
double entropy_vn(const Eigen::MatrixXcd& rho);
double entropy_one_site(double mz);
// binary entropy h(p)
double binary_entropy(double p);

struct BellFidelities {
  double psi_minus, psi_plus, phi_minus, phi_plus;
};
BellFidelities bell_fidelities(const Eigen::Matrix4cd& rho);

double ckw_residual(double tau1, const std::vector<double>& concurrences);

struct TangleDeviation {
  double delta;
  double relative;
};
TangleDeviation tangle_deviation(double det_rho_site, double det_rho_vacuum);

double perturbative_vacuum_concurrence(double t, const ModelParams& p);

}  // namespace xydyn
