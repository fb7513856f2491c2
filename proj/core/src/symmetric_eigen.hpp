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

#pragma once

#include <Eigen/Core>

namespace qroute::detail {

struct SymmetricEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // columns are orthonormal eigenvectors
};

/// Eigendecomposition of a real symmetric matrix (LAPACK dsyevd).
/// Throws NumericalError if the input is not exactly symmetric or the solver fails.
SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& a);

/// V * diag(exp(-i * lambda * t)) * V^T.
Eigen::MatrixXcd exp_minus_i(const SymmetricEigen& eig, double t);

}  // namespace qroute::detail
