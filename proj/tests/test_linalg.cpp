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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "linalg.hpp"

using ghzw::CMatrix;
using ghzw::cplx;

namespace {

CMatrix hermitian4_sample() {
  // Pair marginal of a symmetric three-qubit state at q=0 (the W point):
  // diagonal (1/3, 1/3, 1/3, 0) with the 1/3 couplings of its middle block.
  CMatrix m(4);
  m(0, 0) = 1.0 / 3.0;
  m(1, 1) = 1.0 / 3.0;
  m(2, 2) = 1.0 / 3.0;
  m(1, 2) = 1.0 / 3.0;
  m(2, 1) = 1.0 / 3.0;
  return m;
}

}  // namespace

TEST_CASE("trace and arithmetic") {
  CMatrix a(2);
  a(0, 0) = cplx(1.0, 0.0);
  a(0, 1) = cplx(0.0, 2.0);
  a(1, 0) = cplx(0.0, -2.0);
  a(1, 1) = cplx(3.0, 0.0);
  CHECK(a.trace().real() == doctest::Approx(4.0));
  CHECK(a.hermiticity_error() == doctest::Approx(0.0));

  CMatrix b = a;
  b *= 2.0;
  CHECK(b(0, 1).imag() == doctest::Approx(4.0));
  b -= a;
  CHECK(b.max_abs_diff(a) == doctest::Approx(0.0));
  b += a;
  CHECK(b.trace().real() == doctest::Approx(8.0));
  CHECK(a.offdiag_sq_sum() == doctest::Approx(8.0));
}

TEST_CASE("eigenvalues of small closed-form matrices") {
  CMatrix a(2);
  a(0, 0) = 2.0;
  a(0, 1) = 1.0;
  a(1, 0) = 1.0;
  a(1, 1) = 2.0;
  auto ev = ghzw::hermitian_eigenvalues(a);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(ev[1] == doctest::Approx(3.0).epsilon(1e-13));

  CMatrix c(2);
  c(0, 0) = 1.0;
  c(0, 1) = cplx(0.0, 1.0);
  c(1, 0) = cplx(0.0, -1.0);
  c(1, 1) = 1.0;
  ev = ghzw::hermitian_eigenvalues(c);
  CHECK(ev[0] == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(ev[1] == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("spectrum of the W-point pair marginal") {
  // Eigenvalues are (0, 1/3 twice, ...) rearranged: the coupled middle block
  // gives 0 and 2/3, so ascending: 0, 0, 1/3, 2/3.
  auto ev = ghzw::hermitian_eigenvalues(hermitian4_sample());
  REQUIRE(ev.size() == 4);
  CHECK(std::abs(ev[0]) < 1e-13);
  CHECK(std::abs(ev[1]) < 1e-13);
  CHECK(ev[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(ev[3] == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  CHECK(ghzw::trace_norm(hermitian4_sample()) == doctest::Approx(1.0));
}

TEST_CASE("eigensystem reconstructs the matrix") {
  // Deterministic dense Hermitian 8x8.
  CMatrix m(8);
  for (int i = 0; i < 8; ++i) {
    m(i, i) = std::sin(1.7 * i) + 2.0;
    for (int j = i + 1; j < 8; ++j) {
      m(i, j) = cplx(std::sin(0.3 * i + 0.11 * j), std::cos(1.3 * i - 0.7 * j));
      m(j, i) = std::conj(m(i, j));
    }
  }
  const ghzw::EigenSystem es = ghzw::hermitian_eigensystem(m);
  REQUIRE(es.values.size() == 8);
  REQUIRE(es.vectors.size() == 8);

  for (size_t k = 0; k + 1 < es.values.size(); ++k)
    CHECK(es.values[k] <= es.values[k + 1]);

  // Unit norm, mutual orthogonality, residual ||Av - lambda v||.
  for (size_t k = 0; k < es.vectors.size(); ++k) {
    double nrm = 0.0;
    for (const cplx& v : es.vectors[k]) nrm += std::norm(v);
    CHECK(std::sqrt(nrm) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ghzw::eigen_residual(m, es.vectors[k], es.values[k]) < 1e-10);
    for (size_t l = k + 1; l < es.vectors.size(); ++l) {
      cplx dot = 0.0;
      for (int i = 0; i < 8; ++i)
        dot += std::conj(es.vectors[k][i]) * es.vectors[l][i];
      CHECK(std::abs(dot) < 1e-11);
    }
  }

  // Sum of eigenvalues equals the trace, V diag(lambda) V^dag equals m.
  double evsum = 0.0;
  for (double v : es.values) evsum += v;
  CHECK(evsum == doctest::Approx(m.trace().real()).epsilon(1e-12));

  CMatrix rec(8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      cplx s = 0.0;
      for (size_t k = 0; k < es.values.size(); ++k)
        s += es.values[k] * es.vectors[k][i] * std::conj(es.vectors[k][j]);
      rec(i, j) = s;
    }
  CHECK(rec.max_abs_diff(m) < 1e-11);
}

TEST_CASE("trace norm sums absolute eigenvalues") {
  CMatrix a(2);
  a(0, 0) = 1.0;
  a(1, 1) = -2.0;
  CHECK(ghzw::trace_norm(a) == doctest::Approx(3.0));
}

TEST_CASE("non-hermitian input is rejected") {
  CMatrix a(2);
  a(0, 1) = cplx(1.0, 0.0);
  a(1, 0) = cplx(0.5, 0.0);
  CHECK(a.hermiticity_error() > 0.1);
  CHECK_THROWS_AS(ghzw::hermitian_eigenvalues(a), ghzw::NumericalError);
}
