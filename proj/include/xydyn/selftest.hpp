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

#include <functional>
#include <string>
#include <vector>

namespace xydyn {

struct SelfTestCase {
  std::string name;
  double deviation = 0.0;  // largest absolute difference seen
  double tolerance = 0.0;
  bool passed = false;
};

// analytic engines against exact diagonalization on small rings; a few seconds
std::vector<SelfTestCase> run_selftests(
    const std::function<void(const SelfTestCase&)>& on_case = {});

}  // namespace xydyn
