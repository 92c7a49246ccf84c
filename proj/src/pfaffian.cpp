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

#include "xydyn/pfaffian.hpp"

#include <cmath>

#include "xydyn/error.hpp"

namespace xydyn {

SkewMatrix::SkewMatrix(int dim) {
  require(dim >= 0, ErrorCode::invalid_argument, "negative dimension");
  m_ = Eigen::MatrixXcd::Zero(dim, dim);
}

SkewMatrix SkewMatrix::from_dense(const Eigen::MatrixXcd& m, double tol) {
  require(m.rows() == m.cols(), ErrorCode::invalid_argument, "matrix must be square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m + m.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol * scale) fail(ErrorCode::not_antisymmetric, "matrix is not skew-symmetric");
  SkewMatrix out(static_cast<int>(m.rows()));
  out.m_ = 0.5 * (m - m.transpose());
  return out;
}

void SkewMatrix::set(int i, int j, cplx v) {
  require(i != j, ErrorCode::invalid_argument, "diagonal of a skew matrix is zero");
  m_(i, j) = v;
  m_(j, i) = -v;
}

cplx pfaffian(const SkewMatrix& skew) {
  const int n = skew.dim();
  if (n % 2 != 0) fail(ErrorCode::odd_dimension, "pfaffian of an odd-dimensional matrix");
  if (n == 0) return 1.0;
  const Eigen::MatrixXcd& m = skew.dense();
  if (n == 2) return m(0, 1);
  if (n == 4) return m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2);
  Eigen::MatrixXcd a = m;
  cplx result = 1.0;
  for (int k = 0; k < n - 1; k += 2) {
    // pivot the largest entry of column k below the diagonal into row k+1
    int kp = k + 1;
    double best = std::abs(a(k + 1, k));
    for (int i = k + 2; i < n; ++i) {
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        kp = i;
      }
    }
    if (kp != k + 1) {
      a.row(k + 1).swap(a.row(kp));
      a.col(k + 1).swap(a.col(kp));
      result = -result;
    }
    if (a(k + 1, k) == cplx(0.0)) return 0.0;
    result *= a(k, k + 1);
    if (k + 2 < n) {
      const int rest = n - k - 2;
      const Eigen::VectorXcd tau = a.row(k).tail(rest).transpose() / a(k, k + 1);
      const Eigen::VectorXcd col = a.col(k + 1).tail(rest);
      a.bottomRightCorner(rest, rest) += tau * col.transpose() - col * tau.transpose();
    }
  }
  return result;
}

}  // namespace xydyn
