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

#include <complex>
#include <variant>
#include <vector>

namespace xydyn {

using cplx = std::complex<double>;

struct ThermodynamicLimit {};
struct FiniteRing {
  int n_sites;
};
using ChainSize = std::variant<ThermodynamicLimit, FiniteRing>;

class ModelParams {
 public:
  ModelParams(double lambda, double gamma, ChainSize size = ThermodynamicLimit{});

  double lambda() const { return lambda_; }
  double gamma() const { return gamma_; }
  const ChainSize& size() const { return size_; }
  bool thermodynamic() const {
    return std::holds_alternative<ThermodynamicLimit>(size_);
  }
  // throws precondition when thermodynamic
  int ring_size() const;

 private:
  double lambda_;
  double gamma_;
  ChainSize size_;
};

class Momentum {
 public:
  explicit Momentum(double k);
  double value() const { return k_; }

 private:
  double k_;
};

double dispersion(Momentum k, const ModelParams& p);

// eps_k = 1 + lambda cos k and Delta_k = lambda gamma sin k
double band_energy(double k, const ModelParams& p);
double pairing(double k, const ModelParams& p);

struct Bogoliubov {
  double alpha;
  double beta;
};

Bogoliubov bogoliubov(Momentum k, const ModelParams& p);

// sin(L t)/L with the L -> 0 limit
double sinc_time(double L, double t);

// Ring momenta: the even-parity sector of the spin ring sees antiperiodic fermions,
// k = 2 pi (n + 1/2) / N, the odd sector periodic ones, k = 2 pi n / N. Mapped into (-pi, pi].
enum class RingGrid { antiperiodic, periodic };
std::vector<double> ring_momenta(int n_sites, RingGrid grid = RingGrid::antiperiodic);

// ground-state energy of the finite spin ring (minimum over both parity sectors)
double ring_ground_energy(const ModelParams& p);

int light_cone_cutoff(double lambda, double t);

// c_j(t) = sum_l [ a(l-j) c_l + b(l-j) c_l^dagger ] with c_j(t) = e^{iHt} c_j e^{-iHt}
class EvolutionCoefficients {
 public:
  EvolutionCoefficients(double t, int x_max, std::vector<cplx> a, std::vector<cplx> b);

  double time() const { return t_; }
  int x_max() const { return x_max_; }
  cplx a(int x) const;
  cplx b(int x) const;
  // sum over |x| <= x_max of |a|^2 + |b|^2
  double weight() const;

 private:
  double t_;
  int x_max_;
  std::vector<cplx> a_;  // x = 0..x_max
  std::vector<cplx> b_;
};

EvolutionCoefficients evolution_coefficients(int x_max, double t, const ModelParams& p,
                                             RingGrid grid = RingGrid::antiperiodic);

}  // namespace xydyn
