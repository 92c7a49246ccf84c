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

#include "xydyn/correlators.hpp"

#include <cmath>
#include <numbers>

#include "xydyn/error.hpp"
#include "xydyn/quadrature.hpp"

namespace xydyn {

using std::numbers::pi;

namespace {

struct Sample {
  double k;
  double w;
};

// sum_q w_q f(k_q) = (1/2pi) int_{-pi}^{pi} f for integrands even in k
std::vector<Sample> momentum_samples(const ModelParams& p, double t, int r_max, double ppu,
                                     RingGrid grid) {
  std::vector<Sample> out;
  if (p.thermodynamic()) {
    const int panels = oscillatory_panels(p.lambda() * t, r_max, ppu);
    const QuadratureRule rule = composite_gauss_legendre(0.0, pi, panels);
    out.reserve(rule.nodes.size());
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      out.push_back({rule.nodes[q], rule.weights[q] / pi});
    }
  } else {
    const int N = p.ring_size();
    for (double k : ring_momenta(N, grid)) out.push_back({k, 1.0 / N});
  }
  return out;
}

struct ModeFunctions {
  double uo, ue, v;
};

ModeFunctions mode_functions(double k, double t, const ModelParams& p) {
  const double eps = band_energy(k, p);
  const double delta = pairing(k, p);
  const double L = std::hypot(eps, delta);
  const double s = sinc_time(L, t);
  return {delta * s, eps * s, std::cos(L * t)};
}

}  // namespace

KernelCache::KernelCache(ModelParams p, double t, int radius, std::vector<double> u_odd,
                         std::vector<double> u_even, std::vector<double> v)
    : p_(p), t_(t), radius_(radius), u_odd_(std::move(u_odd)), u_even_(std::move(u_even)),
      v_(std::move(v)) {}

double KernelCache::u_odd(int r) const {
  require(std::abs(r) <= radius_, ErrorCode::window_underflow, "kernel distance beyond radius");
  return r < 0 ? -u_odd_[-r] : u_odd_[r];
}

double KernelCache::u_even(int r) const {
  require(std::abs(r) <= radius_, ErrorCode::window_underflow, "kernel distance beyond radius");
  return u_even_[std::abs(r)];
}

double KernelCache::v(int r) const {
  require(std::abs(r) <= radius_, ErrorCode::window_underflow, "kernel distance beyond radius");
  return v_[std::abs(r)];
}

KernelCache kernels(double t, int radius, const ModelParams& p, double panels_per_unit,
                    RingGrid grid) {
  require(std::isfinite(t) && t >= 0.0, ErrorCode::invalid_argument, "time must be >= 0");
  require(radius >= 0, ErrorCode::invalid_argument, "radius must be >= 0");
  std::vector<double> uo(radius + 1, 0.0), ue(radius + 1, 0.0), v(radius + 1, 0.0);
  for (const Sample& s : momentum_samples(p, t, radius, panels_per_unit, grid)) {
    const ModeFunctions f = mode_functions(s.k, t, p);
    const double c1 = std::cos(s.k), s1 = std::sin(s.k);
    double c = 1.0, sn = 0.0;
    for (int r = 0; r <= radius; ++r) {
      uo[r] += s.w * f.uo * sn;
      ue[r] += s.w * f.ue * c;
      v[r] += s.w * f.v * c;
      const double c_next = c * c1 - sn * s1;
      sn = sn * c1 + c * s1;
      c = c_next;
    }
  }
  return KernelCache(p, t, radius, std::move(uo), std::move(ue), std::move(v));
}

BellTag bell_minus(int i, int j) { return {i, j, pi}; }

ContractionSet::ContractionSet(StateTag tag, double t, int lo, int hi, Eigen::MatrixXcd vac,
                               Eigen::VectorXcd bra, Eigen::VectorXcd ket)
    : tag_(tag), t_(t), lo_(lo), hi_(hi), vac_(std::move(vac)), bra_(std::move(bra)),
      ket_(std::move(ket)) {
  const int n = 2 * (hi - lo + 1);
  require(hi >= lo && vac_.rows() == n && vac_.cols() == n && bra_.size() == n &&
              ket_.size() == n,
          ErrorCode::invalid_argument, "contraction set dimensions");
}

int ContractionSet::index(Majorana p) const {
  if (!covers(p.site)) {
    fail(ErrorCode::window_underflow,
         "site " + std::to_string(p.site) + " outside the contraction window");
  }
  return 2 * (p.site - lo_) + (p.kind == MajoranaKind::B ? 1 : 0);
}

cplx ContractionSet::vacuum(Majorana p, Majorana q) const { return vac_(index(p), index(q)); }
cplx ContractionSet::bra(Majorana p) const { return bra_(index(p)); }
cplx ContractionSet::ket(Majorana p) const { return ket_(index(p)); }

cplx ContractionSet::modification(Majorana p, Majorana q) const {
  const int a = index(p), b = index(q);
  return bra_(a) * ket_(b) - bra_(b) * ket_(a);
}

cplx ContractionSet::operator()(Majorana p, Majorana q) const {
  return vacuum(p, q) + modification(p, q);
}

ContractionSet vacuum_contractions(double t, int lo, int hi, const ModelParams& p,
                                   RingGrid grid) {
  require(std::isfinite(t) && t >= 0.0, ErrorCode::invalid_argument, "time must be >= 0");
  require(hi >= lo, ErrorCode::invalid_argument, "empty window");
  const int span = hi - lo;
  // <A_l B_{l+R}> = delta - avg[2 cos(kR) uo^2 + 2 sin(kR) uo ue]
  // <A_l A_{l+R}> = delta - 2i avg[sin(kR) uo v],  <B B> = -<A A>^*
  std::vector<double> ab_pos(span + 1, 0.0), ab_neg(span + 1, 0.0), aa(span + 1, 0.0);
  for (const Sample& s : momentum_samples(p, t, span, 8.0, grid)) {
    const ModeFunctions f = mode_functions(s.k, t, p);
    for (int R = 0; R <= span; ++R) {
      const double c = std::cos(s.k * R), sn = std::sin(s.k * R);
      const double even = 2.0 * c * f.uo * f.uo;
      const double odd = 2.0 * sn * f.uo * f.ue;
      ab_pos[R] -= s.w * (even + odd);
      ab_neg[R] -= s.w * (even - odd);
      aa[R] += s.w * sn * f.uo * f.v;
    }
  }
  const int n = span + 1;
  Eigen::MatrixXcd vac = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < n; ++m) {
      const int R = m - l;
      const double delta = (R == 0) ? 1.0 : 0.0;
      const double ab = delta + (R >= 0 ? ab_pos[R] : ab_neg[-R]);
      const cplx a_a(delta, -2.0 * (R >= 0 ? aa[R] : -aa[-R]));
      vac(2 * l, 2 * m + 1) = ab;
      vac(2 * m + 1, 2 * l) = -ab;  // distinct Majoranas anticommute, also on one site
      vac(2 * l, 2 * m) = a_a;
      vac(2 * l + 1, 2 * m + 1) = -std::conj(a_a);
    }
  }
  const Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(2 * n);
  return ContractionSet(VacuumTag{}, t, lo, hi, std::move(vac), zero, zero);
}

namespace {

// X = sum_m u[m] c_m + v[m] c_m^dagger for the Heisenberg Majoranas on the window
struct ModeRows {
  int base;  // first mode site
  Eigen::MatrixXcd u, v;  // rows: operator index, cols: mode site - base
};

// ring > 0 wraps mode sites modulo the ring so each site appears once; antiperiodic
// fermions pick up a sign per wrap
template <class AmpA, class AmpB>
ModeRows mode_rows(int lo, int hi, int reach, int ring, bool antiperiodic, AmpA amp_a,
                   AmpB amp_b) {
  const int n = hi - lo + 1;
  const int base = ring > 0 ? 0 : lo - reach;
  const int width = ring > 0 ? ring : n + 2 * reach;
  const int x_lo = ring > 0 ? -ring / 2 + 1 : -reach;
  const int x_hi = ring > 0 ? ring / 2 : reach;
  ModeRows rows{base, Eigen::MatrixXcd::Zero(2 * n, width), Eigen::MatrixXcd::Zero(2 * n, width)};
  for (int l = lo; l <= hi; ++l) {
    const int ia = 2 * (l - lo), ib = ia + 1;
    for (int x = x_lo; x <= x_hi; ++x) {
      const int col = ring > 0 ? ((l + x) % ring + ring) % ring : l + x - base;
      const int wraps = ring > 0 ? (l + x - ((l + x) % ring + ring) % ring) / ring : 0;
      const double sign = (antiperiodic && wraps % 2 != 0) ? -1.0 : 1.0;
      const cplx a = sign * amp_a(x), b = sign * amp_b(x);
      rows.u(ia, col) = a + std::conj(b);
      rows.v(ia, col) = b + std::conj(a);
      rows.u(ib, col) = std::conj(b) - a;
      rows.v(ib, col) = std::conj(a) - b;
    }
  }
  return rows;
}

}  // namespace

ContractionSet vacuum_contractions_from_modes(double t, int lo, int hi, const ModelParams& p,
                                              RingGrid grid) {
  require(hi >= lo, ErrorCode::invalid_argument, "empty window");
  const int reach = p.thermodynamic() ? light_cone_cutoff(p.lambda(), t) : p.ring_size() / 2;
  const EvolutionCoefficients ev = evolution_coefficients(reach, t, p, grid);
  const int ring = p.thermodynamic() ? 0 : p.ring_size();
  const ModeRows rows = mode_rows(
      lo, hi, reach, ring, grid == RingGrid::antiperiodic, [&](int x) { return ev.a(x); }, [&](int x) { return ev.b(x); });
  Eigen::MatrixXcd vac = rows.u * rows.v.transpose();
  const Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(vac.rows());
  return ContractionSet(VacuumTag{}, t, lo, hi, std::move(vac), zero, zero);
}

ContractionSet bell_contractions(double t, int lo, int hi, const ModelParams& p, BellTag bell) {
  require(bell.i != bell.j, ErrorCode::invalid_argument, "Bell sites must differ");
  const RingGrid grid = RingGrid::periodic;  // ignored in the thermodynamic limit
  ContractionSet vac = vacuum_contractions(t, lo, hi, p, grid);
  const int radius = std::max({std::abs(bell.i - lo), std::abs(bell.i - hi),
                               std::abs(bell.j - lo), std::abs(bell.j - hi)});
  const KernelCache kc = kernels(t, radius, p, 8.0, grid);
  const int n = hi - lo + 1;
  Eigen::VectorXcd bra(2 * n), ket(2 * n);
  const double r2 = 1.0 / std::sqrt(2.0);
  const cplx e = std::polar(1.0, bell.phi);
  for (int l = lo; l <= hi; ++l) {
    const int ia = 2 * (l - lo), ib = ia + 1;
    const cplx ai = kc.a(bell.i - l), bi = kc.b(bell.i - l);
    const cplx aj = kc.a(bell.j - l), bj = kc.b(bell.j - l);
    // <C X> = (v_X[i] + e^{-i phi} v_X[j]) / sqrt2, <X C^+> = (u_X[i] + e^{i phi} u_X[j]) / sqrt2
    bra(ia) = r2 * ((bi + std::conj(ai)) + std::conj(e) * (bj + std::conj(aj)));
    ket(ia) = r2 * ((ai + std::conj(bi)) + e * (aj + std::conj(bj)));
    bra(ib) = r2 * ((std::conj(ai) - bi) + std::conj(e) * (std::conj(aj) - bj));
    ket(ib) = r2 * ((std::conj(bi) - ai) + e * (std::conj(bj) - aj));
  }
  Eigen::MatrixXcd m(2 * n, 2 * n);
  for (int a = 0; a < 2 * n; ++a) {
    for (int b = 0; b < 2 * n; ++b) {
      const Majorana pa{a % 2 ? MajoranaKind::B : MajoranaKind::A, lo + a / 2};
      const Majorana pb{b % 2 ? MajoranaKind::B : MajoranaKind::A, lo + b / 2};
      m(a, b) = vac.vacuum(pa, pb);
    }
  }
  return ContractionSet(bell, t, lo, hi, std::move(m), std::move(bra), std::move(ket));
}

cplx printed_bell_modification(const KernelCache& k, BellTag bell, Majorana p, Majorana q) {
  const double c = std::cos(bell.phi);
  require(std::abs(std::abs(c) - 1.0) < 1e-12, ErrorCode::invalid_argument,
          "printed form covers phi = 0 and pi only");
  const double pm = c;
  auto V = [&](int l) { return k.v(bell.i - l) + pm * k.v(bell.j - l); };
  auto P = [&](int l) {
    return k.u_odd(bell.i - l) + k.u_even(bell.i - l) +
           pm * (k.u_odd(bell.j - l) + k.u_even(bell.j - l));
  };
  auto M = [&](int l) {
    return k.u_odd(bell.i - l) - k.u_even(bell.i - l) +
           pm * (k.u_odd(bell.j - l) - k.u_even(bell.j - l));
  };
  const int l = p.site, m = q.site;
  cplx full;
  if (p.kind == MajoranaKind::A && q.kind == MajoranaKind::B) {
    full = -V(m) * V(l) + P(l) * M(m);
  } else if (p.kind == MajoranaKind::B && q.kind == MajoranaKind::A) {
    full = -(-V(l) * V(m) + P(m) * M(l));
  } else if (p.kind == MajoranaKind::A) {
    full = cplx(0.0, 1.0) * (V(m) * P(l) - V(l) * P(m));
  } else {
    full = cplx(0.0, 1.0) * (V(m) * M(l) - V(l) * M(m));
  }
  return 0.5 * full;
}

}  // namespace xydyn
