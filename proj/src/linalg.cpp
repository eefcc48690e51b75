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

#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ghzw {

namespace {

constexpr double kHermTol = 1e-10;
// Off-diagonal Frobenius norm below which the sweep stops; compared squared.
constexpr double kOffTolSq = 1e-13 * 1e-13;
constexpr int kMaxSweeps = 100;

struct JacobiState {
  CMatrix a;  // working copy, driven to diagonal
  CMatrix u;  // accumulated unitary, columns are eigenvectors
};

// One cyclic sweep of two-sided rotations. Each pivot (p,q) is first made
// real by a phase on row/column p, then annihilated by a real rotation.
void sweep(JacobiState& st) {
  const int n = st.a.dim();
  for (int p = 0; p < n - 1; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const cplx z = st.a(p, q);
      const double h = std::abs(z);
      if (h == 0.0) continue;
      const double phi = std::arg(z);
      const cplx ph(std::cos(phi), std::sin(phi));

      const double app = st.a(p, p).real();
      const double aqq = st.a(q, q).real();
      const double tau = (aqq - app) / (2.0 * h);
      const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                       (std::abs(tau) + std::sqrt(1.0 + tau * tau));
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = t * c;

      // Columns, then rows, of the rotation R with
      // R(p,p)=c*ph, R(p,q)=s*ph, R(q,p)=-s, R(q,q)=c.
      for (int k = 0; k < n; ++k) {
        const cplx akp = st.a(k, p);
        const cplx akq = st.a(k, q);
        st.a(k, p) = c * ph * akp - s * akq;
        st.a(k, q) = s * ph * akp + c * akq;
      }
      const cplx phc = std::conj(ph);
      for (int k = 0; k < n; ++k) {
        const cplx apk = st.a(p, k);
        const cplx aqk = st.a(q, k);
        st.a(p, k) = c * phc * apk - s * aqk;
        st.a(q, k) = s * phc * apk + c * aqk;
      }
      // Pin what is exact in exact arithmetic.
      st.a(p, q) = 0.0;
      st.a(q, p) = 0.0;
      st.a(p, p) = cplx(st.a(p, p).real(), 0.0);
      st.a(q, q) = cplx(st.a(q, q).real(), 0.0);

      for (int k = 0; k < n; ++k) {
        const cplx ukp = st.u(k, p);
        const cplx ukq = st.u(k, q);
        st.u(k, p) = c * ph * ukp - s * ukq;
        st.u(k, q) = s * ph * ukp + c * ukq;
      }
    }
  }
}

JacobiState diagonalize(const CMatrix& m) {
  if (m.dim() < 1) throw NumericalError("eigensolve: empty matrix");
  if (m.hermiticity_error() > kHermTol)
    throw NumericalError("eigensolve: input not Hermitian within 1e-10");

  JacobiState st{CMatrix(m.dim()), CMatrix(m.dim())};
  const int n = m.dim();
  // Work on the Hermitian average so the tiny asymmetry allowed by the
  // tolerance cannot bias the rotations.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      st.a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    st.u(i, i) = 1.0;
  }

  for (int it = 0; it < kMaxSweeps; ++it) {
    if (st.a.offdiag_sq_sum() < kOffTolSq) return st;
    sweep(st);
  }
  if (st.a.offdiag_sq_sum() < kOffTolSq) return st;
  throw NumericalError("eigensolve: no convergence in 100 sweeps");
}

}  // namespace

cplx CMatrix::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::hermiticity_error() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

double CMatrix::max_abs_diff(const CMatrix& b) const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - b(i, j)));
  return worst;
}

double CMatrix::offdiag_sq_sum() const {
  double s = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (i != j) s += std::norm((*this)(i, j));
  return s;
}

CMatrix& CMatrix::operator+=(const CMatrix& b) {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) (*this)(i, j) += b(i, j);
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& b) {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) (*this)(i, j) -= b(i, j);
  return *this;
}

CMatrix& CMatrix::operator*=(double s) {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) (*this)(i, j) *= s;
  return *this;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
  JacobiState st = diagonalize(m);
  std::vector<double> vals(m.dim());
  for (int i = 0; i < m.dim(); ++i) vals[i] = st.a(i, i).real();
  std::sort(vals.begin(), vals.end());
  return vals;
}

EigenSystem hermitian_eigensystem(const CMatrix& m) {
  JacobiState st = diagonalize(m);
  const int n = m.dim();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return st.a(i, i).real() < st.a(j, j).real();
  });

  EigenSystem out;
  out.values.resize(n);
  out.vectors.assign(n, std::vector<cplx>(n));
  for (int k = 0; k < n; ++k) {
    out.values[k] = st.a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) out.vectors[k][i] = st.u(i, order[k]);
  }
  return out;
}

double trace_norm(const CMatrix& m) {
  double s = 0.0;
  for (double v : hermitian_eigenvalues(m)) s += std::abs(v);
  return s;
}

double eigen_residual(const CMatrix& m, const std::vector<cplx>& v, double lambda) {
  const int n = m.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    cplx r = -lambda * v[i];
    for (int j = 0; j < n; ++j) r += m(i, j) * v[j];
    s += std::norm(r);
  }
  return std::sqrt(s);
}

}  // namespace ghzw
