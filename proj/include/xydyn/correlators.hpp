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
#include <variant>
#include <vector>

#include "xydyn/model.hpp"

namespace xydyn {

// V(r), U^e(r), U^o(r) for |r| <= radius
class KernelCache {
 public:
  KernelCache(ModelParams p, double t, int radius, std::vector<double> u_odd,
              std::vector<double> u_even, std::vector<double> v);

  const ModelParams& params() const { return p_; }
  double time() const { return t_; }
  int radius() const { return radius_; }
  double u_odd(int r) const;
  double u_even(int r) const;
  double v(int r) const;
  // evolution amplitudes rebuilt from the kernels
  cplx a(int x) const { return {v(x), u_even(x)}; }
  cplx b(int x) const { return {0.0, u_odd(x)}; }

 private:
  ModelParams p_;
  double t_;
  int radius_;
  std::vector<double> u_odd_, u_even_, v_;
};

KernelCache kernels(double t, int radius, const ModelParams& p, double panels_per_unit = 8.0,
                    RingGrid grid = RingGrid::antiperiodic);

enum class MajoranaKind { A, B };

struct Majorana {
  MajoranaKind kind;
  int site;
};

inline Majorana maj_a(int site) { return {MajoranaKind::A, site}; }
inline Majorana maj_b(int site) { return {MajoranaKind::B, site}; }

struct VacuumTag {};
// (c_i^dagger + e^{i phi} c_j^dagger) / sqrt 2 on the all-down state
struct BellTag {
  int i;
  int j;
  double phi;
};
using StateTag = std::variant<VacuumTag, BellTag>;

inline BellTag bell_plus(int i, int j) { return {i, j, 0.0}; }
BellTag bell_minus(int i, int j);

// Majorana two-point functions of one state at one time, on the site window [lo, hi].
// Operators are indexed A_l -> 2(l-lo), B_l -> 2(l-lo)+1.
class ContractionSet {
 public:
  ContractionSet(StateTag tag, double t, int lo, int hi, Eigen::MatrixXcd vac,
                 Eigen::VectorXcd bra, Eigen::VectorXcd ket);

  const StateTag& tag() const { return tag_; }
  bool is_bell() const { return std::holds_alternative<BellTag>(tag_); }
  double time() const { return t_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool covers(int site) const { return site >= lo_ && site <= hi_; }

  // vacuum part <0(t)| X_p X_q |0(t)>
  cplx vacuum(Majorana p, Majorana q) const;
  // <C X_p> and <X_p C^dagger>, C the annihilator of the inserted particle; zero for the vacuum
  cplx bra(Majorana p) const;
  cplx ket(Majorana p) const;
  cplx modification(Majorana p, Majorana q) const;
  // full two-point function in the state
  cplx operator()(Majorana p, Majorana q) const;

  cplx aa(int l, int m) const { return (*this)(maj_a(l), maj_a(m)); }
  cplx bb(int l, int m) const { return (*this)(maj_b(l), maj_b(m)); }
  cplx ab(int l, int m) const { return (*this)(maj_a(l), maj_b(m)); }

 private:
  int index(Majorana p) const;

  StateTag tag_;
  double t_;
  int lo_, hi_;
  Eigen::MatrixXcd vac_;
  Eigen::VectorXcd bra_, ket_;
};

// vacuum two-point functions from the momentum integrals
ContractionSet vacuum_contractions(double t, int lo, int hi, const ModelParams& p,
                                   RingGrid grid = RingGrid::antiperiodic);

// the same from real-space evolution amplitudes, used as an independent route
ContractionSet vacuum_contractions_from_modes(double t, int lo, int hi, const ModelParams& p,
                                              RingGrid grid = RingGrid::antiperiodic);

// On a finite ring the inserted particle makes the state parity odd, so every contraction
// (the vacuum part included) is evaluated with the periodic grid.
ContractionSet bell_contractions(double t, int lo, int hi, const ModelParams& p, BellTag bell);

// the state modification of <X_p X_q> for phi in {0, pi} written with the kernel
// combinations as they appear in the literature (including the 1/2 of the normalization);
// kept for comparison, the oracle decides between this and ContractionSet::modification
cplx printed_bell_modification(const KernelCache& k, BellTag bell, Majorana p, Majorana q);

}  // namespace xydyn
