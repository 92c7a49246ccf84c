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

#include "xydyn/spin_correlators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "xydyn/error.hpp"
#include "xydyn/pfaffian.hpp"

namespace xydyn {

namespace {

constexpr double kImagHealth = 1e-10;

bool layout_less(const Majorana& a, const Majorana& b) {
  if (a.kind != b.kind) return a.kind == MajoranaKind::A;
  return a.site < b.site;
}

double real_checked(cplx v, const char* what) {
  if (std::abs(v.imag()) > kImagHealth * std::max(1.0, std::abs(v.real()))) {
    fail(ErrorCode::numerical_health, std::string(what) + " has an imaginary residue");
  }
  return v.real();
}

}  // namespace

OperatorString natural_string(Axis alpha, Axis beta, int l, int m) {
  require(l < m, ErrorCode::invalid_argument, "operator string needs l < m");
  OperatorString s;
  s.ops.push_back(alpha == Axis::x ? maj_b(l) : maj_a(l));
  for (int k = l + 1; k < m; ++k) {
    s.ops.push_back(maj_a(k));
    s.ops.push_back(maj_b(k));
  }
  s.ops.push_back(beta == Axis::x ? maj_a(m) : maj_b(m));
  if (alpha == Axis::x && beta == Axis::x) s.prefactor = 0.25;
  else if (alpha == Axis::y && beta == Axis::y) s.prefactor = -0.25;
  else s.prefactor = cplx(0.0, -0.25);
  return s;
}

OperatorString operator_string(Axis alpha, Axis beta, int l, int m) {
  OperatorString nat = natural_string(alpha, beta, l, m);
  const int n = static_cast<int>(nat.ops.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return layout_less(nat.ops[a], nat.ops[b]); });
  int inversions = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) inversions += order[a] > order[b] ? 1 : 0;
  }
  OperatorString out;
  for (int idx : order) out.ops.push_back(nat.ops[idx]);
  out.prefactor = (inversions % 2) ? -nat.prefactor : nat.prefactor;
  return out;
}

cplx string_expectation(const OperatorString& s, const Contraction& contraction) {
  const int n = static_cast<int>(s.ops.size());
  SkewMatrix m(n);
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) m.set(p, q, contraction(s.ops[p], s.ops[q]));
  }
  return s.prefactor * pfaffian(m);
}

namespace {

cplx bell_string(const OperatorString& s, const ContractionSet& cs, BellStrategy strategy) {
  const int n = static_cast<int>(s.ops.size());
  switch (strategy) {
    case BellStrategy::enlarged: {
      SkewMatrix m(n + 2);
      m.set(0, n + 1, 1.0);  // <C C^dagger>
      for (int p = 0; p < n; ++p) {
        m.set(0, p + 1, cs.bra(s.ops[p]));
        m.set(p + 1, n + 1, cs.ket(s.ops[p]));
        for (int q = p + 1; q < n; ++q) m.set(p + 1, q + 1, cs.vacuum(s.ops[p], s.ops[q]));
      }
      return s.prefactor * pfaffian(m);
    }
    case BellStrategy::rank_two:
      return string_expectation(s, [&](Majorana a, Majorana b) { return cs(a, b); });
    case BellStrategy::row_replacement:
    case BellStrategy::row_sum_only: {
      SkewMatrix base(n);
      for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) base.set(p, q, cs.vacuum(s.ops[p], s.ops[q]));
      }
      cplx total = strategy == BellStrategy::row_replacement ? pfaffian(base) : cplx(0.0);
      for (int r = 0; r < n; ++r) {
        SkewMatrix ps = base;
        for (int q = 0; q < r; ++q) ps.set(q, r, 0.0);
        for (int q = r + 1; q < n; ++q) ps.set(r, q, cs.modification(s.ops[r], s.ops[q]));
        total += pfaffian(ps);
      }
      return s.prefactor * total;
    }
  }
  return 0.0;
}

}  // namespace

cplx spin_correlator(Axis alpha, Axis beta, int l, int m, const ContractionSet& cs,
                     BellStrategy strategy) {
  require(l != m, ErrorCode::invalid_argument, "two-site correlator needs l != m");
  if (l > m) return spin_correlator(beta, alpha, m, l, cs, strategy);
  const OperatorString s = operator_string(alpha, beta, l, m);
  if (!cs.is_bell()) {
    return string_expectation(s, [&](Majorana a, Majorana b) { return cs.vacuum(a, b); });
  }
  return bell_string(s, cs, strategy);
}

double magnetization(int l, const ContractionSet& cs) {
  return real_checked(-0.5 * cs(maj_a(l), maj_b(l)), "magnetization");
}

ZCorrelators gzz_and_magnetization(int l, int m, const ContractionSet& cs) {
  require(l != m, ErrorCode::invalid_argument, "two-site correlator needs l != m");
  const cplx ab_l = cs(maj_a(l), maj_b(l));
  const cplx ab_m = cs(maj_a(m), maj_b(m));
  const cplx g = 0.25 * (ab_l * ab_m - cs(maj_a(l), maj_a(m)) * cs(maj_b(l), maj_b(m)) +
                         cs(maj_a(l), maj_b(m)) * cs(maj_b(l), maj_a(m)));
  return {real_checked(g, "g_zz"), real_checked(-0.5 * ab_l, "magnetization"),
          real_checked(-0.5 * ab_m, "magnetization")};
}

CorrelatorBundle correlator_bundle(int l, int m, const ContractionSet& cs, BellStrategy strategy) {
  CorrelatorBundle b;
  b.gxx = real_checked(spin_correlator(Axis::x, Axis::x, l, m, cs, strategy), "g_xx");
  b.gyy = real_checked(spin_correlator(Axis::y, Axis::y, l, m, cs, strategy), "g_yy");
  b.gxy = real_checked(spin_correlator(Axis::x, Axis::y, l, m, cs, strategy), "g_xy");
  b.gyx = real_checked(spin_correlator(Axis::y, Axis::x, l, m, cs, strategy), "g_yx");
  const ZCorrelators z = gzz_and_magnetization(l, m, cs);
  b.gzz = z.gzz;
  b.mz_l = z.mz_l;
  b.mz_m = z.mz_m;
  return b;
}

}  // namespace xydyn
