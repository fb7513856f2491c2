// Copyright 2026 The qroute Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symmetric_eigen.hpp"

#include <lapacke.h>

#include <string>

#include "qroute/errors.hpp"

namespace qroute::detail {

SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw NumericalError("eigendecomposition: matrix is not square");
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < a.cols(); ++j) {
      if (a(i, j) != a(j, i)) {
        throw NumericalError("eigendecomposition: matrix is not symmetric at (" +
                             std::to_string(i) + ", " + std::to_string(j) + "): " +
                             std::to_string(a(i, j)) + " vs " + std::to_string(a(j, i)));
      }
    }
  }
  SymmetricEigen out;
  out.vectors = a;
  out.values.resize(a.rows());
  if (a.rows() == 0) return out;
  const auto n = static_cast<lapack_int>(a.rows());
  const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'U', n, out.vectors.data(), n,
                                         out.values.data());
  if (info != 0) {
    throw NumericalError("eigendecomposition: dsyevd failed with info=" + std::to_string(info));
  }
  return out;
}

Eigen::MatrixXcd exp_minus_i(const SymmetricEigen& eig, double t) {
  // Real and imaginary parts as two real products: V cos(lt) V^T - i V sin(lt) V^T.
  const Eigen::ArrayXd angle = eig.values.array() * t;
  const Eigen::MatrixXd vc = eig.vectors * angle.cos().matrix().asDiagonal();
  const Eigen::MatrixXd vs = eig.vectors * angle.sin().matrix().asDiagonal();
  Eigen::MatrixXcd out(eig.vectors.rows(), eig.vectors.rows());
  out.real() = vc * eig.vectors.transpose();
  out.imag() = -(vs * eig.vectors.transpose());
  return out;
}

}  // namespace qroute::detail
