/*
 * Copyright 2026 the ghzw authors
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

#ifndef GHZW_LINALG_HPP
#define GHZW_LINALG_HPP

#include <vector>

#include "common.hpp"

namespace ghzw {

// Dense complex square matrix, small dimensions (2, 4, 8).
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}

  int dim() const { return dim_; }

  cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
  const cplx& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * dim_ + j];
  }

  cplx trace() const;
  // max_ij |a_ij - conj(a_ji)|
  double hermiticity_error() const;
  // max_ij |a_ij - b_ij|
  double max_abs_diff(const CMatrix& b) const;
  // sum_ij |a_ij|^2 restricted to i != j
  double offdiag_sq_sum() const;

  CMatrix& operator+=(const CMatrix& b);
  CMatrix& operator-=(const CMatrix& b);
  CMatrix& operator*=(double s);

 private:
  int dim_ = 0;
  std::vector<cplx> a_;
};

struct EigenSystem {
  std::vector<double> values;              // ascending
  std::vector<std::vector<cplx>> vectors;  // vectors[k] pairs with values[k], unit norm
};

// Eigenvalues of a Hermitian matrix, ascending. Throws NumericalError if the
// input is non-Hermitian beyond 1e-10 or the iteration fails to converge.
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

// Eigenvalues and eigenvectors; same contract as hermitian_eigenvalues.
EigenSystem hermitian_eigensystem(const CMatrix& m);

// Sum of |eigenvalue| over the Hermitian spectrum.
double trace_norm(const CMatrix& m);

// ||M v - lambda v||_2 for one eigenpair.
double eigen_residual(const CMatrix& m, const std::vector<cplx>& v, double lambda);

}  // namespace ghzw

#endif
