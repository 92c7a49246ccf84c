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

#include <vector>

namespace xydyn {

inline constexpr int kBesselMaxOrder = 2000;
inline constexpr double kBesselMaxArgument = 2000.0;

double bessel_j(int n, double x);

// J_0(x) .. J_{n_max}(x) from one recurrence sweep
std::vector<double> bessel_sequence(int n_max, double x);

// J_n(x) for n in [-n_max, n_max], index n + n_max
std::vector<double> bessel_table(int n_max, double x);

}  // namespace xydyn
