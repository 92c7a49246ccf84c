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

#include <Eigen/Dense>
#include <complex>

namespace xydyn {

using cplx = std::complex<double>;

class SkewMatrix {
 public:
  explicit SkewMatrix(int dim);
  // validates antisymmetry within tol (absolute, scaled by the largest entry)
  static SkewMatrix from_dense(const Eigen::MatrixXcd& m, double tol = 1e-12);

  int dim() const { return static_cast<int>(m_.rows()); }
  // sets (i, j) = v and (j, i) = -v; i != j
  void set(int i, int j, cplx v);
  cplx operator()(int i, int j) const { return m_(i, j); }
  const Eigen::MatrixXcd& dense() const { return m_; }

 private:
  Eigen::MatrixXcd m_;
};

// Parlett-Reid elimination with pivoting; destroys nothing, works on a copy
cplx pfaffian(const SkewMatrix& m);

}  // namespace xydyn
