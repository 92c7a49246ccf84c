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

#include <chrono>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "xydyn/correlators.hpp"
#include "xydyn/error.hpp"
#include "xydyn/pfaffian.hpp"
#include "xydyn/spin_correlators.hpp"

using namespace xydyn;

namespace {

SkewMatrix random_skew(int dim, std::mt19937& rng) {
  std::normal_distribution<double> nd;
  SkewMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) m.set(i, j, {nd(rng), nd(rng)});
  return m;
}

}  // namespace

TEST_CASE("pfaffian small closed forms") {
  SkewMatrix two(2);
  two.set(0, 1, {0.3, -1.2});
  CHECK(pfaffian(two) == cplx(0.3, -1.2));

  std::mt19937 rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    SkewMatrix m = random_skew(4, rng);
    const cplx expect = m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2);
    CHECK(pfaffian(m) == expect);
  }
  // zero leading entries force pivoting
  SkewMatrix z(4);
  z.set(0, 2, 2.0);
  z.set(1, 3, 3.0);
  CHECK(pfaffian(z) == cplx(-6.0, 0.0));
  CHECK(pfaffian(SkewMatrix(0)) == cplx(1.0, 0.0));
  CHECK(pfaffian(SkewMatrix(6)) == cplx(0.0, 0.0));
}

TEST_CASE("pfaffian squared equals determinant") {
  std::mt19937 rng(17);
  double worst = 0;
  for (int rep = 0; rep < 20; ++rep) {
    const int dim = 2 * (1 + rep % 10);
    SkewMatrix m = random_skew(dim, rng);
    const cplx pf = pfaffian(m);
    const cplx det = m.dense().determinant();
    worst = std::max(worst, std::abs(pf * pf - det) / std::abs(det));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("pfaffian under permutations") {
  std::mt19937 rng(23);
  for (int rep = 0; rep < 10; ++rep) {
    const int dim = 8;
    SkewMatrix m = random_skew(dim, rng);
    std::vector<int> perm(dim);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) p(k, perm[k]) = 1.0;
    const cplx sign = p.determinant();
    auto q = SkewMatrix::from_dense(p * m.dense() * p.transpose());
    CHECK(std::abs(pfaffian(q) - sign * pfaffian(m)) < 1e-11 * std::abs(pfaffian(m)));
  }
}

TEST_CASE("pfaffian input validation") {
  CHECK_THROWS_AS(pfaffian(SkewMatrix(3)), Error);
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
  bad(0, 1) = 1.0;
  bad(1, 0) = -0.9;
  CHECK_THROWS_AS(SkewMatrix::from_dense(bad), Error);
  bad(1, 0) = -1.0;
  bad(0, 0) = 1e-3;
  CHECK_THROWS_AS(SkewMatrix::from_dense(bad), Error);
  CHECK_THROWS_AS(SkewMatrix(4).set(1, 1, 1.0), Error);
}

TEST_CASE("operator strings and prefactors") {
  auto xx = operator_string(Axis::x, Axis::x, 3, 4);
  REQUIRE(xx.ops.size() == 2);
  CHECK(xx.ops[0].kind == MajoranaKind::A);
  CHECK(xx.ops[0].site == 4);
  CHECK(xx.ops[1].kind == MajoranaKind::B);
  CHECK(xx.ops[1].site == 3);
  CHECK(xx.prefactor == cplx(-0.25, 0.0));
  auto yy = operator_string(Axis::y, Axis::y, 3, 4);
  CHECK(yy.ops[0].kind == MajoranaKind::A);
  CHECK(yy.ops[0].site == 3);
  CHECK(yy.ops[1].kind == MajoranaKind::B);
  CHECK(yy.ops[1].site == 4);
  CHECK(yy.prefactor == cplx(-0.25, 0.0));
  for (int r = 1; r <= 6; ++r) {
    const double s = ((r * (r + 1) / 2) % 2) ? -1.0 : 1.0;
    const double sxy = ((r * (r - 1) / 2) % 2) ? -1.0 : 1.0;
    CHECK(operator_string(Axis::x, Axis::x, 0, r).prefactor == cplx(0.25 * s, 0.0));
    CHECK(operator_string(Axis::y, Axis::y, 0, r).prefactor == cplx(0.25 * s, 0.0));
    CHECK(operator_string(Axis::x, Axis::y, 0, r).prefactor == cplx(0.0, -0.25 * sxy));
    CHECK(operator_string(Axis::y, Axis::x, 0, r).prefactor == cplx(0.0, -0.25 * sxy));
    auto o = operator_string(Axis::x, Axis::x, 0, r);
    CHECK(o.ops.size() == static_cast<std::size_t>(2 * r));
    // A block (l+1..m) then B block (l..m-1)
    for (int k = 0; k < r; ++k) {
      CHECK(o.ops[k].kind == MajoranaKind::A);
      CHECK(o.ops[k].site == k + 1);
      CHECK(o.ops[r + k].kind == MajoranaKind::B);
      CHECK(o.ops[r + k].site == k);
    }
  }
}

TEST_CASE("reordered strings equal the natural Jordan-Wigner product") {
  std::mt19937 rng(5);
  std::normal_distribution<double> nd;
  // arbitrary antisymmetric contraction table keyed by operator index
  const int sites = 8;
  Eigen::MatrixXcd table(2 * sites, 2 * sites);
  for (int i = 0; i < 2 * sites; ++i)
    for (int j = 0; j < 2 * sites; ++j) table(i, j) = {nd(rng), nd(rng)};
  table = table - table.transpose().eval();
  Contraction c = [&](Majorana p, Majorana q) {
    const int a = 2 * p.site + (p.kind == MajoranaKind::B);
    const int b = 2 * q.site + (q.kind == MajoranaKind::B);
    return table(a, b);
  };
  for (Axis a : {Axis::x, Axis::y})
    for (Axis b : {Axis::x, Axis::y})
      for (int r = 1; r <= 5; ++r) {
        const cplx u = string_expectation(natural_string(a, b, 1, 1 + r), c);
        const cplx v = string_expectation(operator_string(a, b, 1, 1 + r), c);
        CHECK(std::abs(u - v) < 1e-12 * (1 + std::abs(u)));
      }
}

TEST_CASE("vacuum correlators at t=0 and gamma=0") {
  auto cs = vacuum_contractions(0.0, -2, 6, ModelParams(1.0, 0.5));
  for (Axis a : {Axis::x, Axis::y})
    for (Axis b : {Axis::x, Axis::y}) CHECK(std::abs(spin_correlator(a, b, 0, 2, cs)) < 1e-14);
  auto z = gzz_and_magnetization(1, 2, cs);
  CHECK(z.gzz == doctest::Approx(0.25));
  CHECK(z.mz_l == doctest::Approx(-0.5));
  auto c0 = vacuum_contractions(3.0, -2, 6, ModelParams(0.8, 0.0));
  CHECK(std::abs(spin_correlator(Axis::x, Axis::y, 0, 3, c0)) < 1e-12);
  CHECK(std::abs(spin_correlator(Axis::x, Axis::x, 0, 3, c0)) < 1e-12);
  CHECK(magnetization(2, c0) == doctest::Approx(-0.5));
}

TEST_CASE("Bell strategies agree and the sum-only reading does not") {
  ModelParams p(1.0, 0.5);
  auto cs = bell_contractions(1.0, -2, 6, p, bell_minus(1, 2));
  double spread = 0, sum_only = 0;
  for (Axis a : {Axis::x, Axis::y})
    for (Axis b : {Axis::x, Axis::y})
      for (auto [l, m] : {std::pair{1, 2}, {0, 3}, {2, 4}, {-1, 1}}) {
        const cplx e = spin_correlator(a, b, l, m, cs, BellStrategy::enlarged);
        spread = std::max(spread, std::abs(e - spin_correlator(a, b, l, m, cs, BellStrategy::rank_two)));
        spread = std::max(spread,
                          std::abs(e - spin_correlator(a, b, l, m, cs, BellStrategy::row_replacement)));
        sum_only = std::max(sum_only,
                            std::abs(e - spin_correlator(a, b, l, m, cs, BellStrategy::row_sum_only)));
        // symmetry g^{ab}_{lm} = g^{ba}_{ml}
        CHECK(std::abs(e - spin_correlator(b, a, m, l, cs)) < 1e-12);
      }
  CHECK(spread < 1e-12);
  CHECK(sum_only > 1e-2);
}

TEST_CASE("windows must cover the operator string") {
  auto cs = vacuum_contractions(1.0, 0, 3, ModelParams(1.0, 0.5));
  CHECK_THROWS_AS(spin_correlator(Axis::x, Axis::x, 2, 5, cs), Error);
  CHECK_THROWS_AS(gzz_and_magnetization(1, 1, cs), Error);
}

TEST_CASE("fourteen-operator string cost") {
  auto cs = vacuum_contractions(2.0, 0, 10, ModelParams(1.0, 0.5));
  const int reps = 200;
  auto t0 = std::chrono::steady_clock::now();
  cplx acc = 0;
  for (int k = 0; k < reps; ++k) acc += spin_correlator(Axis::x, Axis::x, 1, 8, cs);
  const double per = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
  CHECK(std::isfinite(acc.real()));
  CHECK(per < 1e-3);
}
