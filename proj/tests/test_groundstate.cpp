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

#include <cmath>

#include "doctest.h"
#include "xydyn/error.hpp"
#include "xydyn/groundstate.hpp"
#include "xydyn/oracle.hpp"
#include "xydyn/spin_correlators.hpp"

using namespace xydyn;

TEST_CASE("polarized limit") {
  ModelParams p(0.0, 0.7);
  CHECK(gs_contraction(0, p) == doctest::Approx(1.0));
  for (int r : {-3, -1, 1, 4}) CHECK(std::abs(gs_contraction(r, p)) < 1e-14);
  CHECK(gs_concurrence(1, p) < 1e-12);
  CHECK(gs_concurrence(3, p) < 1e-12);
}

TEST_CASE("contraction bounds and refinement") {
  for (double lam : {0.3, 1.0, 2.0}) {
    GroundStateContraction g(ModelParams(lam, 0.4), 8);
    for (int r = -8; r <= 8; ++r) CHECK(std::abs(g(r)) <= 1.0);
  }
  CHECK_THROWS_AS(GroundStateContraction(ModelParams(1.0, 0.4), 3)(4), Error);
  CHECK_THROWS_AS(gs_concurrence(17, ModelParams(1.0, 0.4)), Error);
}

TEST_CASE("ground-state concurrence table") {
  struct Row {
    double gamma, lambda, c1;
  };
  for (Row r : {Row{0.1, 0.5, 0.0264}, Row{0.1, 1.0, 0.0337}, Row{0.5, 0.5, 0.1204},
                Row{0.5, 1.0, 0.1285}, Row{1.0, 0.5, 0.2074}, Row{1.0, 1.0, 0.1946},
                Row{1.0, 0.9, 0.2475}}) {
    CHECK(std::abs(gs_concurrence(1, ModelParams(r.lambda, r.gamma)) - r.c1) < 0.002);
  }
  // frozen values of the same computation
  CHECK(gs_concurrence(1, ModelParams(1.0, 0.5)) == doctest::Approx(0.12851).epsilon(1e-4));
  CHECK(gs_concurrence(2, ModelParams(1.0, 0.5)) == doctest::Approx(0.04666).epsilon(1e-3));
}

TEST_CASE("Ising ordering trend") {
  double last = 0;
  for (double lam : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    const double gxx = gs_correlators(1, ModelParams(lam, 1.0)).gxx;
    CHECK(gxx > last);
    CHECK(gxx < 0.25);
    last = gxx;
  }
  CHECK(last > 0.24);
}

TEST_CASE("isotropic ground state differs from the vacuum") {
  // all spins up below the critical coupling, a product state opposite to the vacuum
  CHECK(gs_concurrence(1, ModelParams(0.5, 0.0)) < 1e-12);
  CHECK(gs_correlators(1, ModelParams(0.5, 0.0)).mz == doctest::Approx(0.5));
  CHECK(gs_concurrence(1, ModelParams(0.5, 0.05)) > 0.005);
  CHECK(gs_concurrence(1, ModelParams(1.5, 0.0)) > 0.1);
}

TEST_CASE("thermodynamic limit against a large ring") {
  for (double lam : {0.5, 1.5}) {
    ModelParams inf(lam, 0.5), ring(lam, 0.5, FiniteRing{512});
    GroundStateContraction g(ring, 6);
    for (int r = -6; r <= 6; ++r) CHECK(std::abs(gs_contraction(r, inf) - g(r)) < 1e-8);
  }
  // critical coupling converges algebraically in 1/N
  ModelParams inf(1.0, 0.5), ring(1.0, 0.5, FiniteRing{512});
  GroundStateContraction g(ring, 6);
  for (int r = -6; r <= 6; ++r) CHECK(std::abs(gs_contraction(r, inf) - g(r)) < 1e-4);
}

TEST_CASE("Toeplitz and Pfaffian routes agree") {
  ModelParams p(0.8, 0.6);
  auto cs = gs_contractions(0, 6, p);
  for (int d = 1; d <= 4; ++d) {
    auto a = gs_correlators(d, p);
    auto b = correlator_bundle(0, d, cs);
    CHECK(std::abs(a.gxx - b.gxx) < 1e-12);
    CHECK(std::abs(a.gyy - b.gyy) < 1e-12);
    CHECK(std::abs(a.gzz - b.gzz) < 1e-12);
    CHECK(std::abs(a.mz - b.mz_l) < 1e-12);
    CHECK(std::abs(b.gxy) < 1e-12);
  }
}

TEST_CASE("finite rings match the oracle ground state") {
  for (double lam : {0.5, 1.0}) {
    ModelParams p(lam, 0.5, FiniteRing{10});
    RingOracle o(p);
    auto gs = o.prepare(OracleGroundState{});
    for (int d = 1; d <= 5; ++d) {
      auto a = gs_bundle(d, p);
      auto b = oracle_bundle(gs, 0, d);
      CHECK(std::abs(a.gxx - b.gxx) < 1e-10);
      CHECK(std::abs(a.gyy - b.gyy) < 1e-10);
      CHECK(std::abs(a.gzz - b.gzz) < 1e-10);
      CHECK(std::abs(a.mz_l - b.mz_l) < 1e-10);
    }
    auto ts = gs_tangle_sum_check(p, 16);
    double s2 = 0;
    for (int d = 1; d < 10; ++d) s2 += std::pow(concurrence_wootters(reduced_density(gs, {0, d})), 2);
    CHECK(std::abs(ts.sum_c_squared - s2) < 1e-10);
    CHECK(std::abs(ts.tau1 - one_tangle(oracle_sz(gs, 0))) < 1e-10);
  }
}

TEST_CASE("thermodynamic ground state against ten sites") {
  ModelParams inf(0.5, 0.5);
  RingOracle o(ModelParams(0.5, 0.5, FiniteRing{10}));
  auto gs = o.prepare(OracleGroundState{});
  for (int d = 1; d <= 3; ++d) {
    auto a = gs_bundle(d, inf);
    auto b = oracle_bundle(gs, 0, d);
    CHECK(std::abs(a.gxx - b.gxx) < 1e-3);
    CHECK(std::abs(a.gzz - b.gzz) < 1e-3);
    CHECK(std::abs(gs_concurrence(d, inf) - concurrence_wootters(reduced_density(gs, {0, d}))) < 1e-3);
  }
}

TEST_CASE("tangle sum at the critical coupling") {
  auto ising = gs_tangle_sum_check(ModelParams(1.0, 1.0), 16);
  CHECK(ising.sum_c_squared < ising.tau1);
  auto half = gs_tangle_sum_check(ModelParams(1.0, 0.5), 16);
  CHECK(half.sum_c_squared < 0.2 * half.tau1);
  CHECK(gs_tangle_sum_check(ModelParams(1.0, 0.0), 16).sum_c_squared < 1e-20);
  // roughly linear in gamma
  double lo = 1e9, hi = 0;
  for (double g : {0.1, 0.2, 0.5, 1.0}) {
    const double ratio = gs_tangle_sum_check(ModelParams(1.0, g), 16).sum_c_squared / g;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  CHECK(hi / lo < 1.1);
}
