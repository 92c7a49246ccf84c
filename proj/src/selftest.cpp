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

#include "xydyn/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "xydyn/correlators.hpp"
#include "xydyn/groundstate.hpp"
#include "xydyn/isotropic.hpp"
#include "xydyn/measures.hpp"
#include "xydyn/oracle.hpp"
#include "xydyn/spin_correlators.hpp"

namespace xydyn {

namespace {

double gap(const CorrelatorBundle& a, const CorrelatorBundle& b) {
  return std::max({std::abs(a.gxx - b.gxx), std::abs(a.gyy - b.gyy), std::abs(a.gxy - b.gxy),
                   std::abs(a.gyx - b.gyx), std::abs(a.gzz - b.gzz), std::abs(a.mz_l - b.mz_l),
                   std::abs(a.mz_m - b.mz_m)});
}

double ring_gap(const ContractionSet& cs, const SpinRegister& reg, int n) {
  double worst = 0.0;
  for (int l = 0; l < n; ++l)
    for (int m = l + 1; m < n; ++m) worst = std::max(worst, gap(correlator_bundle(l, m, cs), oracle_bundle(reg, l, m)));
  return worst;
}

double vacuum_ring8() {
  const ModelParams p(1.0, 0.5, FiniteRing{8});
  RingOracle o(p);
  return ring_gap(vacuum_contractions(1.3, 0, 7, p), o.evolve(o.prepare(OracleVacuum{}), 1.3), 8);
}

double bell_ring8() {
  const ModelParams p(0.8, 1.0, FiniteRing{8});
  RingOracle o(p);
  double worst = 0.0;
  for (double phi : {std::numbers::pi, 0.7}) {
    const auto reg = o.evolve(o.prepare(OraclePsiBell{1, 3, phi}), 2.1);
    worst = std::max(worst, ring_gap(bell_contractions(2.1, 0, 7, p, BellTag{1, 3, phi}), reg, 8));
  }
  return worst;
}

double ground_ring8() {
  double worst = 0.0;
  for (double lam : {0.5, 1.0, 1.5}) {
    const ModelParams p(lam, 0.5, FiniteRing{8});
    RingOracle o(p);
    const auto gs = o.prepare(OracleGroundState{});
    for (int d = 1; d <= 4; ++d) {
      worst = std::max(worst, gap(gs_bundle(d, p), oracle_bundle(gs, 0, d)));
    }
  }
  return worst;
}

double isotropic_ring40() {
  // 40 sites keep the images out of reach for lambda t = 4
  const int off = 20;
  SectorOracle o(1.0, 40, 2);
  const double t = 4.0;
  const auto reg = o.evolve(o.prepare(OraclePsiBell{off, off + 1, std::numbers::pi}), t);
  const auto s = wavepacket(0, 1, std::numbers::pi, t, 1.0);
  double worst = 0.0;
  for (int l = -6; l <= 6; ++l)
    for (int m = l + 1; m <= l + 3; ++m) {
      const double c = concurrence_wootters(reduced_density(reg, {l + off, m + off}));
      worst = std::max(worst, std::abs(c - concurrence_psi(s, l, m)));
    }
  return worst;
}

}  // namespace

std::vector<SelfTestCase> run_selftests(const std::function<void(const SelfTestCase&)>& on_case) {
  struct Entry {
    const char* name;
    double (*fn)();
    double tol;
  };
  const Entry entries[] = {
      {"vacuum_ring8", vacuum_ring8, 1e-10},
      {"bell_ring8", bell_ring8, 1e-10},
      {"ground_ring8", ground_ring8, 1e-10},
      {"isotropic_ring40", isotropic_ring40, 1e-6},
  };
  std::vector<SelfTestCase> out;
  for (const Entry& e : entries) {
    SelfTestCase c;
    c.name = e.name;
    c.tolerance = e.tol;
    c.deviation = e.fn();
    c.passed = std::isfinite(c.deviation) && c.deviation <= e.tol;
    if (on_case) on_case(c);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace xydyn
