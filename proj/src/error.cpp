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

#include "xydyn/error.hpp"

namespace xydyn {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::out_of_range: return "out-of-range";
    case ErrorCode::degenerate_momentum: return "degenerate-momentum";
    case ErrorCode::cutoff_too_small: return "cutoff-too-small";
    case ErrorCode::quadrature_failure: return "quadrature-failure";
    case ErrorCode::odd_dimension: return "odd-dimension";
    case ErrorCode::not_antisymmetric: return "not-antisymmetric";
    case ErrorCode::window_underflow: return "window-underflow";
    case ErrorCode::nonphysical: return "nonphysical";
    case ErrorCode::invalid_radicand: return "invalid-radicand";
    case ErrorCode::size_exceeded: return "size-exceeded";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::config_invalid: return "config-invalid";
    case ErrorCode::engine_capability: return "engine-capability";
    case ErrorCode::io_failure: return "io-failure";
    case ErrorCode::numerical_health: return "numerical-health";
  }
  return "unknown";
}

void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(error_code_name(code)) + ": " + what);
}

}  // namespace xydyn
