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
#include <functional>
#include <vector>

#include "xydyn/correlators.hpp"
#include "xydyn/measures.hpp"

namespace xydyn {

enum class Axis { x, y };

struct OperatorString {
  std::vector<Majorana> ops;
  cplx prefactor;
};

// <S^alpha_l S^beta_m> = prefactor * <ops...>, l < m, Jordan-Wigner product order
OperatorString natural_string(Axis alpha, Axis beta, int l, int m);

// the same operators reordered into the A block followed by the B block, sign folded in
OperatorString operator_string(Axis alpha, Axis beta, int l, int m);

enum class BellStrategy {
  enlarged,          // one Pfaffian over (C, ops, C^dagger)
  rank_two,          // pf(M + K)
  row_replacement,   // pf(M) + sum_s pf(P^s)
  row_sum_only,      // sum_s pf(P^s) alone, the literal reading of the printed prescription
};

using Contraction = std::function<cplx(Majorana, Majorana)>;

// prefactor * pf[ contraction(ops_p, ops_q) ]
cplx string_expectation(const OperatorString& s, const Contraction& contraction);

cplx spin_correlator(Axis alpha, Axis beta, int l, int m, const ContractionSet& cs,
                     BellStrategy strategy = BellStrategy::enlarged);

struct ZCorrelators {
  double gzz;
  double mz_l;
  double mz_m;
};

ZCorrelators gzz_and_magnetization(int l, int m, const ContractionSet& cs);

double magnetization(int l, const ContractionSet& cs);

// every two-site correlator of the pair (l, m)
CorrelatorBundle correlator_bundle(int l, int m, const ContractionSet& cs,
                                   BellStrategy strategy = BellStrategy::enlarged);

}  // namespace xydyn
