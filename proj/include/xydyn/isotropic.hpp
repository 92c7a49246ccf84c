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
#include <complex>
#include <vector>

#include "xydyn/model.hpp"

namespace xydyn {

// One flipped spin on the all-down chain at gamma = 0:
// w_l(t) = [ i^{l-i} J_{l-i}(lambda t) + e^{i phi} i^{l-j} J_{l-j}(lambda t) ] / sqrt 2,
// the field phase e^{it} common to all sites dropped.
class SingleParticleState {
 public:
  SingleParticleState(int i, int j, double phi, double t, double lambda, int lo,
                      std::vector<cplx> amps);

  int source_i() const { return i_; }
  int source_j() const { return j_; }
  double phase() const { return phi_; }
  double time() const { return t_; }
  double lambda() const { return lambda_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(w_.size()) - 1; }
  // zero outside the stored light-cone window
  cplx w(int l) const;
  double norm() const;
  // all amplitudes multiplied by a unit phase (for invariance checks)
  SingleParticleState rephased(double alpha) const;

 private:
  int i_, j_;
  double phi_, t_, lambda_;
  int lo_;
  std::vector<cplx> w_;
};

SingleParticleState wavepacket(int i, int j, double phi, double t, double lambda);

double concurrence_psi(const SingleParticleState& s, int n, int m);
double self_concurrence(int x, double phi, double t, double lambda);
double two_site_entropy(const SingleParticleState& s, int n, int m);
double block_entropy(const SingleParticleState& s, const std::vector<int>& sites);
double fidelity_psi(const SingleParticleState& s, int n, int m, double phi_ref);

struct CkwPair {
  double one_tangle;
  double concurrence_square_sum;
};
CkwPair ckw_pair(const SingleParticleState& s, int j);
double total_concurrence(const SingleParticleState& s, int n);

// two-site matrix (uu, ud, du, dd) of the one-particle state on (n, m)
Eigen::Matrix4cd one_particle_rho2(const SingleParticleState& s, int n, int m);

// (|all down> + e^{i phi} |up_i up_j>) / sqrt 2 evolved at gamma = 0, pair (n, m) with n < m
struct PhiStateCoefficients {
  int n, m, i, j;
  double phi, t, lambda;
  double a, b, x, y;
  double r_c;  // J_{n-i}J_{m-j} - J_{m-i}J_{n-j}
  double r_z;  // real bracket of z, interior sum included
  cplx c;      // lab frame: (1/2) e^{i phi} e^{2it} i^{n+m-i-j} r_c
  cplx z;      // (1/2) i^{n-m} r_z
  double c_abs() const { return std::abs(c); }
  double z_abs() const { return std::abs(z); }
  // coherence with the field phase e^{2it} removed
  cplx c_rotating() const;
  Eigen::Matrix4cd rho2() const;
};

PhiStateCoefficients phi_state_coefficients(int i, int j, int n, int m, double t, double lambda,
                                            double phi = 0.0);

enum class ConcurrenceBranch { none, phi_like, psi_like };

struct BranchedConcurrence {
  double value;
  ConcurrenceBranch branch;
};
BranchedConcurrence concurrence_phi(const PhiStateCoefficients& c);

// Phi fidelity in the field-rotating frame, Psi fidelity (frame independent)
double phi_fidelity(const PhiStateCoefficients& c, double phi_ref);
double psi_fidelity(const PhiStateCoefficients& c, double phi_ref);

struct OptimalPhases {
  double phi_opt_phi;
  double phi_opt_psi;
};
// the Phi phase maximizes phi_fidelity when r_c > 0 and is shifted by pi when r_c < 0;
// likewise the Psi phase with r_z
OptimalPhases optimal_phases(int n, int m, int i, int j, double phi);

}  // namespace xydyn
