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
#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "xydyn/correlators.hpp"
#include "xydyn/measures.hpp"
#include "xydyn/model.hpp"

namespace xydyn {

inline constexpr int kOracleMaxSites = 12;
inline constexpr int kSectorOracleMaxSites = 64;

// Spin basis: bit l of a mask set means site l is up. Site indices are ring positions 0..N-1.
struct SpinComponent {
  double weight;
  Eigen::VectorXcd amps;
};

struct SpinRegister {
  int n_sites = 0;
  std::shared_ptr<const std::vector<std::uint64_t>> basis;  // amplitude index -> mask
  std::vector<SpinComponent> components;  // a mixture of normalized vectors

  double total_weight() const;
};

struct OracleVacuum {};
struct OraclePsiBell {  // (|up_i> + e^{i phi} |up_j>) / sqrt 2 on all-down
  int i, j;
  double phi;
};
struct OraclePhiBell {  // (|all down> + e^{i phi} |up_i up_j>) / sqrt 2
  int i, j;
  double phi;
};
struct OracleGroundState {};
struct OracleKnittedSinglet {  // singlet on (i, j) knitted into the ground state
  int i, j;
};
using OracleScenario = std::variant<OracleVacuum, OraclePsiBell, OraclePhiBell,
                                    OracleGroundState, OracleKnittedSinglet>;

// dense Hamiltonian over all 2^N basis states (mask order); n_sites in [2, 12]
Eigen::MatrixXd build_hamiltonian(double lambda, double gamma, int n_sites);
Eigen::MatrixXd build_hamiltonian(const ModelParams& p);

// Exact evolution on a ring of at most 12 sites. Blocks are labelled by the conserved
// parity (or the magnetization when gamma = 0); their spectral decompositions are cached
// process-wide so repeated oracles with equal couplings share one diagonalization.
class RingOracle {
 public:
  explicit RingOracle(const ModelParams& p);

  int n_sites() const { return n_; }
  const ModelParams& params() const { return p_; }

  SpinRegister prepare(const OracleScenario& s) const;
  SpinRegister evolve(const SpinRegister& reg, double t) const;
  double energy(const SpinRegister& reg) const;
  double ground_energy() const;
  Eigen::VectorXcd ground_state() const;

 private:
  struct Block;
  const Block& block(int label) const;
  int label_of(std::uint64_t mask) const;
  int label_count() const;
  bool has_weight(const Eigen::VectorXcd& amps, int label) const;

  ModelParams p_;
  int n_;
  std::shared_ptr<const std::vector<std::uint64_t>> basis_;
};

// Exact evolution at gamma = 0 restricted to at most max_up flipped spins, rings up to 64 sites
class SectorOracle {
 public:
  SectorOracle(double lambda, int n_sites, int max_up = 2);

  int n_sites() const { return n_; }
  SpinRegister prepare(const OracleScenario& s) const;
  SpinRegister evolve(const SpinRegister& reg, double t) const;

 private:
  struct Sector {
    std::vector<int> positions;  // indices into the basis
    Eigen::VectorXd energies;
    Eigen::MatrixXd vectors;
  };

  double lambda_;
  int n_;
  int max_up_;
  std::shared_ptr<const std::vector<std::uint64_t>> basis_;
  std::vector<Sector> sectors_;
};

// reduced density matrix on the listed ring sites, basis ordered with up before down and
// the first listed site most significant: for two sites (uu, ud, du, dd)
Eigen::MatrixXcd reduced_density(const SpinRegister& reg, const std::vector<int>& sites);

double oracle_sz(const SpinRegister& reg, int site);

// <S^a_l S^b_m> for a, b in {'x', 'y', 'z'}, l != m
cplx oracle_spin_correlator(const SpinRegister& reg, char a, char b, int l, int m);

CorrelatorBundle oracle_bundle(const SpinRegister& reg, int l, int m);

// <X_p X_q> with Jordan-Wigner strings starting at ring site 0
cplx oracle_majorana(const SpinRegister& reg, Majorana p, Majorana q);

}  // namespace xydyn
