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
#include <numbers>
#include <random>

#include "doctest.h"
#include "xydyn/bessel.hpp"
#include "xydyn/error.hpp"
#include "xydyn/model.hpp"
#include "xydyn/quadrature.hpp"

using namespace xydyn;
using std::numbers::pi;

TEST_CASE("dispersion limits") {
  for (double k : {-2.0, -0.3, 0.0, 1.1, pi}) {
    CHECK(dispersion(Momentum(k), ModelParams(0.0, 0.4)) == doctest::Approx(1.0));
  }
  CHECK(dispersion(Momentum(pi), ModelParams(1.0, 1.0)) == doctest::Approx(0.0));
  for (double lam : {0.3, 1.0, 2.5}) {
    for (double k : {-2.9, -1.0, 0.5, 2.0}) {
      ModelParams p(lam, 0.0);
      CHECK(dispersion(Momentum(k), p) == doctest::Approx(std::abs(1 + lam * std::cos(k))));
      ModelParams q(lam, 0.7);
      CHECK(dispersion(Momentum(k), q) == doctest::Approx(dispersion(Momentum(-k), q)));
    }
  }
}

TEST_CASE("model parameter validation") {
  CHECK_THROWS_AS(ModelParams(-0.1, 0.5), Error);
  CHECK_THROWS_AS(ModelParams(1.0, 1.5), Error);
  CHECK_THROWS_AS(ModelParams(1.0, 0.5, FiniteRing{5}), Error);
  CHECK_THROWS_AS(ModelParams(1.0, 0.5, FiniteRing{2}), Error);
  CHECK_THROWS_AS(Momentum(4.0), Error);
  CHECK_NOTHROW(ModelParams(1.0, 0.5, FiniteRing{4}));
}

TEST_CASE("bogoliubov normalization and limits") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> uk(-pi, pi), ul(0.0, 3.0), ug(0.0, 1.0);
  for (int n = 0; n < 100; ++n) {
    const double k = uk(rng);
    ModelParams p(ul(rng), ug(rng));
    if (dispersion(Momentum(k), p) < 1e-9) continue;
    const Bogoliubov b = bogoliubov(Momentum(k), p);
    CHECK(b.alpha * b.alpha + b.beta * b.beta == doctest::Approx(1.0).epsilon(1e-12));
    // 2 alpha beta = Delta / Lambda
    CHECK(2 * b.alpha * b.beta ==
          doctest::Approx(pairing(k, p) / dispersion(Momentum(k), p)).epsilon(1e-10));
  }
  // gamma -> 0+ with lambda <= 1: alpha -> 0, beta -> sign k
  const Bogoliubov small = bogoliubov(Momentum(1.2), ModelParams(0.8, 1e-9));
  CHECK(small.alpha == doctest::Approx(0.0));
  CHECK(small.beta == doctest::Approx(1.0));
  const Bogoliubov neg = bogoliubov(Momentum(-1.2), ModelParams(0.8, 1e-9));
  CHECK(neg.beta == doctest::Approx(-1.0));
  // Delta = 0 exactly: continuous limit
  const Bogoliubov zero = bogoliubov(Momentum(0.0), ModelParams(0.5, 0.5));
  CHECK(zero.alpha == 0.0);
  CHECK(zero.beta == 1.0);
  CHECK_THROWS_AS(bogoliubov(Momentum(pi), ModelParams(1.0, 0.5)), Error);
}

TEST_CASE("bessel against libstdc++ special functions") {
  // libstdc++ loses accuracy for large arguments, so it is only trusted up to x = 100
  for (double x : {0.01, 0.5, 1.0, 2.5, 7.3, 25.0, 80.0}) {
    for (int n : {0, 1, 2, 5, 17, 40, 100, 400, 1500, 2000}) {
      const double ref = std::cyl_bessel_j(static_cast<double>(n), x);
      CHECK(std::abs(bessel_j(n, x) - ref) < 1e-12);
      const double sign = (n % 2) ? -1.0 : 1.0;
      CHECK(bessel_j(-n, x) == doctest::Approx(sign * bessel_j(n, x)).epsilon(1e-14));
    }
  }
  // mpmath at 30 digits
  struct Ref {
    int n;
    double x, v;
  };
  const Ref refs[] = {
      {0, 333.3, 0.038466654416718675},   {1, 333.3, -0.020687550206813365},
      {7, 333.3, 0.017866051831654336},   {150, 333.3, 0.035635774589855508},
      {333, 333.3, 0.067084992704670281}, {400, 333.3, 2.1308967628416979e-14},
      {1000, 333.3, 0.0},                 {0, 1000.0, 0.024786686152420175},
      {1, 1000.0, 0.0047283119070895239}, {7, 1000.0, -0.0053217830764436154},
      {150, 1000.0, -0.011348678443717025}, {333, 1000.0, -0.0097800506447715347},
      {400, 1000.0, 0.024556866970123085}, {1000, 1000.0, 0.044730672947964041},
      {2000, 1000.0, 0.0},                {0, 1999.0, 0.017613159806480085},
      {1, 1999.0, 0.0028759404354997087}, {7, 1999.0, -0.003087192578304043},
      {150, 1999.0, -0.015758702238189369}, {333, 1999.0, 0.0055154043038723273},
      {400, 1999.0, -0.015610614346126064}, {1000, 1999.0, -0.0018117211414167298},
      {1500, 1999.0, 0.0030002655761441479}, {2000, 1999.0, 0.03292320146927471},
  };
  for (const Ref& r : refs) CHECK(std::abs(bessel_j(r.n, r.x) - r.v) < 1e-12);
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(3, 0.0) == 0.0);
  CHECK(bessel_j(-3, 0.0) == 0.0);
  const std::vector<double> tab = bessel_table(80, 25.0);
  double s = 0.0;
  for (double v : tab) s += v * v;
  CHECK(std::abs(s - 1.0) < 1e-10);
  CHECK_THROWS_AS(bessel_j(2001, 1.0), Error);
  CHECK_THROWS_AS(bessel_j(1, 2000.5), Error);
  CHECK_THROWS_AS(bessel_j(1, -1.0), Error);
}

TEST_CASE("gauss legendre integrates polynomials exactly") {
  const QuadratureRule r = composite_gauss_legendre(0.0, 2.0, 3, 10);
  double s = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], 19);
  CHECK(s == doctest::Approx(std::pow(2.0, 20) / 20).epsilon(1e-13));
  CHECK(integrate_adaptive([](double k) { return std::cos(3 * k) * std::cos(3 * k); }, 0, pi) ==
        doctest::Approx(pi / 2).epsilon(1e-13));
}

TEST_CASE("evolution coefficients: identity at t = 0") {
  for (const ModelParams& p : {ModelParams(0.7, 0.3), ModelParams(1.0, 1.0, FiniteRing{16})}) {
    const EvolutionCoefficients ev = evolution_coefficients(8, 0.0, p);
    for (int x = -8; x <= 8; ++x) {
      CHECK(std::abs(ev.a(x) - cplx(x == 0 ? 1.0 : 0.0)) < 1e-13);
      CHECK(std::abs(ev.b(x)) < 1e-13);
    }
  }
}

TEST_CASE("evolution coefficients: parity and unitarity") {
  for (double lt : {1.0, 10.0, 50.0}) {
    ModelParams p(1.0, 1.0);
    const EvolutionCoefficients ev = evolution_coefficients(light_cone_cutoff(1.0, lt), lt, p);
    CHECK(std::abs(ev.weight() - 1.0) < 1e-10);
    CHECK(ev.a(3) == ev.a(-3));
    CHECK(ev.b(-3) == -ev.b(3));
  }
  ModelParams q(0.6, 0.4);
  CHECK_THROWS_AS(evolution_coefficients(5, 20.0, q), Error);
}

TEST_CASE("evolution coefficients: gamma = 0 reduces to Bessel amplitudes") {
  const double lam = 1.3, t = 4.0;
  ModelParams p(lam, 0.0);
  const EvolutionCoefficients ev = evolution_coefficients(40, t, p);
  const cplx field = std::polar(1.0, t);
  for (int x = -10; x <= 10; ++x) {
    const cplx ix = std::pow(cplx(0, 1), std::abs(x));
    const cplx expect = field * ix * bessel_j(std::abs(x), lam * t);
    CHECK(std::abs(ev.a(x) - expect) < 1e-12);
    CHECK(std::abs(ev.b(x)) < 1e-14);
  }
}

TEST_CASE("evolution coefficients: finite ring of 512 matches the infinite chain") {
  for (double t : {2.0, 20.0}) {
    const ModelParams inf(1.0, 0.6);
    const ModelParams ring(1.0, 0.6, FiniteRing{512});
    const EvolutionCoefficients a = evolution_coefficients(60, t, inf);
    const EvolutionCoefficients b = evolution_coefficients(60, t, ring);
    for (int x = 0; x <= 60; ++x) {
      CHECK(std::abs(a.a(x) - b.a(x)) < 1e-8);
      CHECK(std::abs(a.b(x) - b.b(x)) < 1e-8);
    }
  }
}

TEST_CASE("evolution coefficients: frozen values") {
  // gamma = 1, lambda = 1, t = 1 (oracle cross-checked against the N = 12 diagonalization)
  const EvolutionCoefficients ev = evolution_coefficients(31, 1.0, ModelParams(1.0, 1.0));
  CHECK(std::abs(ev.weight() - 1.0) < 1e-10);
}
