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

#include "xydyn/oracle.hpp"

#include <lapacke.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>
#include <unordered_map>

#include "xydyn/error.hpp"

namespace xydyn {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::uint64_t bit(int site) { return std::uint64_t{1} << site; }
bool is_up(std::uint64_t mask, int site) { return (mask >> site) & 1u; }

// H restricted to the masks of one block; flips leave the block only if the label is wrong
Eigen::MatrixXd block_matrix(double lambda, double gamma, int n,
                             const std::vector<std::uint64_t>& masks) {
  std::unordered_map<std::uint64_t, int> where;
  where.reserve(masks.size() * 2);
  for (std::size_t q = 0; q < masks.size(); ++q) where.emplace(masks[q], static_cast<int>(q));
  const int dim = static_cast<int>(masks.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const std::uint64_t mask = masks[col];
    h(col, col) = -(std::popcount(mask) - 0.5 * n);
    for (int l = 0; l < n; ++l) {
      const int m = (l + 1) % n;  // for n = 2 the bond appears twice, as on any ring
      const double coef = is_up(mask, l) != is_up(mask, m) ? -0.5 * lambda : -0.5 * lambda * gamma;
      if (coef == 0.0) continue;
      const auto it = where.find(mask ^ bit(l) ^ bit(m));
      if (it == where.end()) continue;
      h(it->second, col) += coef;
    }
  }
  return h;
}

void symmetric_eigen(Eigen::MatrixXd& a, Eigen::VectorXd& w) {
  const int n = static_cast<int>(a.rows());
  w.resize(n);
  if (n == 0) return;
  const lapack_int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'U', n, a.data(), n, w.data());
  if (info != 0) fail(ErrorCode::numerical_health, "dsyevd failed");
}

std::shared_ptr<const std::vector<std::uint64_t>> full_basis(int n) {
  auto b = std::make_shared<std::vector<std::uint64_t>>(std::size_t{1} << n);
  for (std::size_t q = 0; q < b->size(); ++q) (*b)[q] = q;
  return b;
}

// amplitude of basis index; works for dense (identity) and listed bases
class BasisIndex {
 public:
  explicit BasisIndex(const SpinRegister& reg) : reg_(reg) {
    const auto& b = *reg.basis;
    dense_ = b.size() == (std::size_t{1} << reg.n_sites) && reg.n_sites <= kOracleMaxSites;
    if (!dense_) {
      for (std::size_t q = 0; q < b.size(); ++q) map_.emplace(b[q], static_cast<int>(q));
    }
  }
  int find(std::uint64_t mask) const {
    if (dense_) return static_cast<int>(mask);
    const auto it = map_.find(mask);
    return it == map_.end() ? -1 : it->second;
  }

 private:
  const SpinRegister& reg_;
  bool dense_ = false;
  std::unordered_map<std::uint64_t, int> map_;
};

SpinRegister single_state(int n, std::shared_ptr<const std::vector<std::uint64_t>> basis,
                          const std::vector<std::pair<std::uint64_t, cplx>>& amps) {
  SpinRegister reg;
  reg.n_sites = n;
  reg.basis = std::move(basis);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(reg.basis->size()));
  const BasisIndex idx(reg);
  for (const auto& [mask, a] : amps) {
    const int q = idx.find(mask);
    require(q >= 0, ErrorCode::invalid_argument, "state outside the oracle basis");
    v(q) += a;
  }
  reg.components.push_back({1.0, std::move(v)});
  return reg;
}

void check_site(int n, int site) {
  require(site >= 0 && site < n, ErrorCode::invalid_argument,
          "site " + std::to_string(site) + " outside the ring");
}

void check_pair(int n, int i, int j) {
  check_site(n, i);
  check_site(n, j);
  require(i != j, ErrorCode::invalid_argument, "sites must differ");
}

}  // namespace

double SpinRegister::total_weight() const {
  double s = 0.0;
  for (const auto& c : components) s += c.weight * c.amps.squaredNorm();
  return s;
}

Eigen::MatrixXd build_hamiltonian(double lambda, double gamma, int n_sites) {
  if (n_sites > kOracleMaxSites) fail(ErrorCode::size_exceeded, "oracle supports N <= 12");
  require(n_sites >= 2, ErrorCode::invalid_argument, "ring needs at least two sites");
  return block_matrix(lambda, gamma, n_sites, *full_basis(n_sites));
}

Eigen::MatrixXd build_hamiltonian(const ModelParams& p) {
  if (p.ring_size() > kOracleMaxSites) fail(ErrorCode::size_exceeded, "oracle supports N <= 12");
  return build_hamiltonian(p.lambda(), p.gamma(), p.ring_size());
}

struct RingOracle::Block {
  std::vector<int> positions;
  Eigen::VectorXd energies;
  Eigen::MatrixXd vectors;
};

RingOracle::RingOracle(const ModelParams& p) : p_(p), n_(p.ring_size()) {
  if (n_ > kOracleMaxSites) fail(ErrorCode::size_exceeded, "oracle supports N <= 12");
  basis_ = full_basis(n_);
}

int RingOracle::label_of(std::uint64_t mask) const {
  const int up = std::popcount(mask);
  return p_.gamma() == 0.0 ? up : up % 2;
}

bool RingOracle::has_weight(const Eigen::VectorXcd& amps, int label) const {
  for (std::uint64_t m = 0; m < basis_->size(); ++m) {
    if (label_of(m) == label && amps(m) != cplx(0.0)) return true;
  }
  return false;
}

int RingOracle::label_count() const { return p_.gamma() == 0.0 ? n_ + 1 : 2; }

const RingOracle::Block& RingOracle::block(int label) const {
  using Key = std::tuple<int, double, double, int>;
  static std::mutex mu;
  static std::map<Key, std::shared_future<std::shared_ptr<const Block>>> cache;
  const Key key{n_, p_.lambda(), p_.gamma(), label};
  std::shared_future<std::shared_ptr<const Block>> fut;
  std::promise<std::shared_ptr<const Block>> promise;
  bool owner = false;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) {
      fut = promise.get_future().share();
      cache.emplace(key, fut);
      owner = true;
    } else {
      fut = it->second;
    }
  }
  if (owner) {
    try {
      auto b = std::make_shared<Block>();
      std::vector<std::uint64_t> masks;
      for (std::uint64_t m = 0; m < basis_->size(); ++m) {
        if (label_of(m) == label) {
          masks.push_back(m);
          b->positions.push_back(static_cast<int>(m));
        }
      }
      b->vectors = block_matrix(p_.lambda(), p_.gamma(), n_, masks);
      symmetric_eigen(b->vectors, b->energies);
      promise.set_value(std::move(b));
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  return *fut.get();
}

SpinRegister RingOracle::evolve(const SpinRegister& reg, double t) const {
  require(reg.n_sites == n_ && reg.basis->size() == basis_->size(), ErrorCode::invalid_argument,
          "register does not belong to this oracle");
  SpinRegister out = reg;
  for (auto& comp : out.components) {
    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(comp.amps.size());
    for (int label = 0; label < label_count(); ++label) {
      // blocks without weight are never diagonalized
      if (!has_weight(comp.amps, label)) continue;
      const Block& b = block(label);
      const int dim = static_cast<int>(b.positions.size());
      Eigen::VectorXd re(dim), im(dim);
      for (int q = 0; q < dim; ++q) {
        re(q) = comp.amps(b.positions[q]).real();
        im(q) = comp.amps(b.positions[q]).imag();
      }
      const Eigen::VectorXd cr = b.vectors.transpose() * re;
      const Eigen::VectorXd ci = b.vectors.transpose() * im;
      Eigen::VectorXd nr(dim), ni(dim);
      for (int q = 0; q < dim; ++q) {
        const cplx c = cplx(cr(q), ci(q)) * std::polar(1.0, -b.energies(q) * t);
        nr(q) = c.real();
        ni(q) = c.imag();
      }
      const Eigen::VectorXd vr = b.vectors * nr;
      const Eigen::VectorXd vi = b.vectors * ni;
      for (int q = 0; q < dim; ++q) next(b.positions[q]) = cplx(vr(q), vi(q));
    }
    comp.amps = std::move(next);
  }
  return out;
}

double RingOracle::energy(const SpinRegister& reg) const {
  double e = 0.0;
  for (const auto& comp : reg.components) {
    for (int label = 0; label < label_count(); ++label) {
      if (!has_weight(comp.amps, label)) continue;
      const Block& b = block(label);
      const int dim = static_cast<int>(b.positions.size());
      Eigen::VectorXcd x(dim);
      for (int q = 0; q < dim; ++q) x(q) = comp.amps(b.positions[q]);
      const Eigen::VectorXd cr = b.vectors.transpose() * x.real();
      const Eigen::VectorXd ci = b.vectors.transpose() * x.imag();
      e += comp.weight * (b.energies.array() * (cr.array().square() + ci.array().square())).sum();
    }
  }
  return e;
}

double RingOracle::ground_energy() const {
  double best = std::numeric_limits<double>::infinity();
  for (int label = 0; label < label_count(); ++label) {
    const Block& b = block(label);
    if (b.energies.size() > 0) best = std::min(best, b.energies(0));
  }
  return best;
}

Eigen::VectorXcd RingOracle::ground_state() const {
  int arg = -1;
  double best = std::numeric_limits<double>::infinity();
  for (int label = 0; label < label_count(); ++label) {
    const Block& b = block(label);
    if (b.energies.size() > 0 && b.energies(0) < best - 1e-12) {
      best = b.energies(0);
      arg = label;
    }
  }
  const Block& b = block(arg);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis_->size()));
  for (std::size_t q = 0; q < b.positions.size(); ++q) v(b.positions[q]) = b.vectors(q, 0);
  return v;
}

SpinRegister RingOracle::prepare(const OracleScenario& s) const {
  if (std::holds_alternative<OracleVacuum>(s)) return single_state(n_, basis_, {{0, 1.0}});
  if (const auto* psi = std::get_if<OraclePsiBell>(&s)) {
    check_pair(n_, psi->i, psi->j);
    return single_state(n_, basis_,
                        {{bit(psi->i), kInvSqrt2}, {bit(psi->j), std::polar(kInvSqrt2, psi->phi)}});
  }
  if (const auto* phi = std::get_if<OraclePhiBell>(&s)) {
    check_pair(n_, phi->i, phi->j);
    return single_state(n_, basis_,
                        {{0, kInvSqrt2}, {bit(phi->i) | bit(phi->j), std::polar(kInvSqrt2, phi->phi)}});
  }
  SpinRegister reg;
  reg.n_sites = n_;
  reg.basis = basis_;
  const Eigen::VectorXcd gs = ground_state();
  if (std::holds_alternative<OracleGroundState>(s)) {
    reg.components.push_back({1.0, gs});
    return reg;
  }
  const auto& knit = std::get<OracleKnittedSinglet>(s);
  check_pair(n_, knit.i, knit.j);
  const std::uint64_t bi = bit(knit.i), bj = bit(knit.j);
  for (int mu = 0; mu < 2; ++mu) {
    for (int nu = 0; nu < 2; ++nu) {
      // |s>_{ij} <mu nu|GS>
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(gs.size());
      for (std::uint64_t m = 0; m < basis_->size(); ++m) {
        if (static_cast<int>(is_up(m, knit.i)) != mu || static_cast<int>(is_up(m, knit.j)) != nu) {
          continue;
        }
        const std::uint64_t rest = m & ~(bi | bj);
        v(rest | bi) += kInvSqrt2 * gs(m);
        v(rest | bj) -= kInvSqrt2 * gs(m);
      }
      const double w = v.squaredNorm();
      if (w > 0.0) reg.components.push_back({w, v / std::sqrt(w)});
    }
  }
  return reg;
}

SectorOracle::SectorOracle(double lambda, int n_sites, int max_up)
    : lambda_(lambda), n_(n_sites), max_up_(max_up) {
  if (n_sites > kSectorOracleMaxSites) fail(ErrorCode::size_exceeded, "sector oracle supports N <= 64");
  require(n_sites >= 4 && max_up >= 0 && max_up <= 2, ErrorCode::invalid_argument,
          "sector oracle needs N >= 4 and at most two flipped spins");
  require(lambda >= 0.0, ErrorCode::invalid_argument, "lambda must be >= 0");
  auto basis = std::make_shared<std::vector<std::uint64_t>>();
  sectors_.resize(max_up + 1);
  basis->push_back(0);
  sectors_[0].positions.push_back(0);
  if (max_up >= 1) {
    for (int a = 0; a < n_; ++a) {
      sectors_[1].positions.push_back(static_cast<int>(basis->size()));
      basis->push_back(bit(a));
    }
  }
  if (max_up >= 2) {
    for (int a = 0; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) {
        sectors_[2].positions.push_back(static_cast<int>(basis->size()));
        basis->push_back(bit(a) | bit(b));
      }
    }
  }
  basis_ = basis;
  for (auto& sec : sectors_) {
    std::vector<std::uint64_t> masks;
    for (int q : sec.positions) masks.push_back((*basis_)[q]);
    sec.vectors = block_matrix(lambda_, 0.0, n_, masks);
    symmetric_eigen(sec.vectors, sec.energies);
  }
}

SpinRegister SectorOracle::prepare(const OracleScenario& s) const {
  if (std::holds_alternative<OracleVacuum>(s)) return single_state(n_, basis_, {{0, 1.0}});
  if (const auto* psi = std::get_if<OraclePsiBell>(&s)) {
    check_pair(n_, psi->i, psi->j);
    return single_state(n_, basis_,
                        {{bit(psi->i), kInvSqrt2}, {bit(psi->j), std::polar(kInvSqrt2, psi->phi)}});
  }
  if (const auto* phi = std::get_if<OraclePhiBell>(&s)) {
    check_pair(n_, phi->i, phi->j);
    require(max_up_ >= 2, ErrorCode::invalid_argument, "Phi states need two flipped spins");
    return single_state(n_, basis_,
                        {{0, kInvSqrt2}, {bit(phi->i) | bit(phi->j), std::polar(kInvSqrt2, phi->phi)}});
  }
  fail(ErrorCode::engine_capability, "sector oracle prepares vacuum and Bell states only");
}

SpinRegister SectorOracle::evolve(const SpinRegister& reg, double t) const {
  require(reg.basis == basis_, ErrorCode::invalid_argument, "register does not belong to this oracle");
  SpinRegister out = reg;
  for (auto& comp : out.components) {
    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(comp.amps.size());
    for (const Sector& sec : sectors_) {
      const int dim = static_cast<int>(sec.positions.size());
      Eigen::VectorXcd x(dim);
      for (int q = 0; q < dim; ++q) x(q) = comp.amps(sec.positions[q]);
      if (x.squaredNorm() == 0.0) continue;
      const Eigen::VectorXd cr = sec.vectors.transpose() * x.real();
      const Eigen::VectorXd ci = sec.vectors.transpose() * x.imag();
      Eigen::VectorXd nr(dim), ni(dim);
      for (int q = 0; q < dim; ++q) {
        const cplx c = cplx(cr(q), ci(q)) * std::polar(1.0, -sec.energies(q) * t);
        nr(q) = c.real();
        ni(q) = c.imag();
      }
      const Eigen::VectorXd vr = sec.vectors * nr;
      const Eigen::VectorXd vi = sec.vectors * ni;
      for (int q = 0; q < dim; ++q) next(sec.positions[q]) = cplx(vr(q), vi(q));
    }
    comp.amps = std::move(next);
  }
  return out;
}

Eigen::MatrixXcd reduced_density(const SpinRegister& reg, const std::vector<int>& sites) {
  const int k = static_cast<int>(sites.size());
  require(k >= 1 && k <= 10, ErrorCode::invalid_argument, "reduced density on 1..10 sites");
  std::uint64_t local_mask = 0;
  for (int s : sites) {
    check_site(reg.n_sites, s);
    require(!(local_mask & bit(s)), ErrorCode::invalid_argument, "repeated site");
    local_mask |= bit(s);
  }
  const int dim = 1 << k;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  const auto& basis = *reg.basis;
  for (const auto& comp : reg.components) {
    std::unordered_map<std::uint64_t, Eigen::VectorXcd> by_rest;
    for (std::size_t q = 0; q < basis.size(); ++q) {
      const cplx amp = comp.amps(static_cast<Eigen::Index>(q));
      if (amp == cplx(0.0)) continue;
      const std::uint64_t m = basis[q];
      int local = 0;
      for (int s = 0; s < k; ++s) local = 2 * local + (is_up(m, sites[s]) ? 0 : 1);
      auto [it, fresh] = by_rest.try_emplace(m & ~local_mask);
      if (fresh) it->second = Eigen::VectorXcd::Zero(dim);
      it->second(local) += amp;
    }
    for (const auto& [rest, v] : by_rest) rho += comp.weight * v * v.adjoint();
  }
  return rho;
}

double oracle_sz(const SpinRegister& reg, int site) {
  const Eigen::MatrixXcd rho = reduced_density(reg, {site});
  return 0.5 * (rho(0, 0).real() - rho(1, 1).real());
}

cplx oracle_spin_correlator(const SpinRegister& reg, char a, char b, int l, int m) {
  require(l != m, ErrorCode::invalid_argument, "two-site correlator needs l != m");
  const Eigen::MatrixXcd rho = reduced_density(reg, {l, m});
  // spin matrices in the (up, down) basis
  auto spin = [](char c) {
    Eigen::Matrix2cd s;
    switch (c) {
      case 'x': s << 0, 0.5, 0.5, 0; break;
      case 'y': s << 0, cplx(0, -0.5), cplx(0, 0.5), 0; break;
      case 'z': s << 0.5, 0, 0, -0.5; break;
      default: fail(ErrorCode::invalid_argument, "axis must be x, y or z");
    }
    return s;
  };
  const Eigen::Matrix2cd sa = spin(a), sb = spin(b);
  Eigen::Matrix4cd op;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k2 = 0; k2 < 2; ++k2)
        for (int l2 = 0; l2 < 2; ++l2) op(2 * i + k2, 2 * j + l2) = sa(i, j) * sb(k2, l2);
  return (rho * op).trace();
}

namespace {

// X|mask> = coef |mask'> with the string prod_{s<l} (1 - 2 n_s)
std::pair<std::uint64_t, cplx> apply_majorana(Majorana p, std::uint64_t mask) {
  const std::uint64_t below = mask & (bit(p.site) - 1);
  const double sign = (std::popcount(below) % 2) ? -1.0 : 1.0;
  const bool up = is_up(mask, p.site);
  const std::uint64_t flipped = mask ^ bit(p.site);
  if (p.kind == MajoranaKind::A) return {flipped, sign};
  // B = c^dagger - c: |down> -> |up>, |up> -> -|down>
  return {flipped, up ? -sign : sign};
}

}  // namespace

cplx oracle_majorana(const SpinRegister& reg, Majorana p, Majorana q) {
  check_site(reg.n_sites, p.site);
  check_site(reg.n_sites, q.site);
  const BasisIndex idx(reg);
  const auto& basis = *reg.basis;
  cplx total = 0.0;
  for (const auto& comp : reg.components) {
    cplx s = 0.0;
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const cplx amp = comp.amps(static_cast<Eigen::Index>(r));
      if (amp == cplx(0.0)) continue;
      const auto [m1, c1] = apply_majorana(q, basis[r]);
      const auto [m2, c2] = apply_majorana(p, m1);
      const int target = idx.find(m2);
      if (target < 0) continue;
      s += std::conj(comp.amps(target)) * c1 * c2 * amp;
    }
    total += comp.weight * s;
  }
  return total;
}

CorrelatorBundle oracle_bundle(const SpinRegister& reg, int l, int m) {
  CorrelatorBundle b;
  b.gxx = oracle_spin_correlator(reg, 'x', 'x', l, m).real();
  b.gyy = oracle_spin_correlator(reg, 'y', 'y', l, m).real();
  b.gxy = oracle_spin_correlator(reg, 'x', 'y', l, m).real();
  b.gyx = oracle_spin_correlator(reg, 'y', 'x', l, m).real();
  b.gzz = oracle_spin_correlator(reg, 'z', 'z', l, m).real();
  b.mz_l = oracle_sz(reg, l);
  b.mz_m = oracle_sz(reg, m);
  return b;
}

}  // namespace xydyn
