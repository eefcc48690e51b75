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

#include "measures.hpp"

#include <cmath>

namespace ghzw {

namespace {

double cube(double x) { return x * x * x; }

}  // namespace

double tangle_signed_argument(double q) {
  return q * q - (8.0 / 9.0) * std::sqrt(6.0 * q * cube(1.0 - q));
}

double tangle_closed(const Ray& ray) {
  const double c = (8.0 / 9.0) * std::sqrt(6.0 * ray.q * cube(1.0 - ray.q));
  const double re = ray.q * ray.q - c * std::cos(3.0 * ray.theta);
  const double im = c * std::sin(3.0 * ray.theta);
  return clamp01(std::hypot(re, im));
}

double tangle_vector(const PureState& psi) {
  if (std::abs(norm(psi) - 1.0) > 1e-12)
    throw std::invalid_argument("tangle_vector: state not unit norm");
  const cplx a000 = psi[0], a001 = psi[1], a010 = psi[2], a011 = psi[3];
  const cplx a100 = psi[4], a101 = psi[5], a110 = psi[6], a111 = psi[7];

  const cplx d1 = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 +
                  a010 * a010 * a101 * a101 + a100 * a100 * a011 * a011;
  const cplx d2 = a000 * a111 * a011 * a100 + a000 * a111 * a101 * a010 +
                  a000 * a111 * a110 * a001 + a011 * a100 * a101 * a010 +
                  a011 * a100 * a110 * a001 + a101 * a010 * a110 * a001;
  const cplx d3 = a000 * a110 * a101 * a011 + a111 * a001 * a010 * a100;

  return clamp01(4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3));
}

CMatrix pair_marginal(const Ray& ray) {
  return partial_trace(density(superpose(ray)), Subsystems::AB);
}

CMatrix pt_pair_marginal(const Ray& ray) {
  return partial_transpose_first(pair_marginal(ray));
}

double concurrence_a_bc(const Ray& ray) {
  const CMatrix rho_a = partial_trace(density(superpose(ray)), Subsystems::A);
  double purity = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) purity += std::norm(rho_a(i, j));
  return clamp01(std::sqrt(std::max(0.0, 2.0 * (1.0 - purity))));
}

double concurrence_closed(double q) {
  return std::sqrt((5.0 * q * q - 4.0 * q + 8.0) / 9.0);
}

double negativity_ab(const Ray& ray) {
  return std::max(0.0, trace_norm(pt_pair_marginal(ray)) - 1.0);
}

double pi_pure(const Ray& ray) {
  const double c = concurrence_a_bc(ray);
  const double n = negativity_ab(ray);
  return clamp01(c * c - 2.0 * n * n);
}

CharPolyCoeffs pt_charpoly(double q, double cos3theta) {
  if (!std::isfinite(q) || q < -1e-12 || q > 1.0 + 1e-12)
    throw std::invalid_argument("pt_charpoly: q outside [0,1]");
  if (!std::isfinite(cos3theta) || std::abs(cos3theta) > 1.0 + 1e-12)
    throw std::invalid_argument("pt_charpoly: cos3theta outside [-1,1]");
  q = clamp01(q);
  const double ct = std::max(-1.0, std::min(1.0, cos3theta));
  const double s6 = std::sqrt(6.0);
  const double m32 = std::pow(q * (1.0 - q), 1.5);

  CharPolyCoeffs c;
  c.c3 = -1.0;
  c.c2 = (5.0 / 36.0) * q * q - q / 9.0 + 2.0 / 9.0;
  c.c1 = m32 / (3.0 * s6) * ct - (7.0 / 27.0) * cube(q) + (7.0 / 18.0) * q * q -
         q / 6.0 + 1.0 / 27.0;
  c.c0 = -q * m32 / (6.0 * s6) * ct - (41.0 / 648.0) * (q * q) * (q * q) +
         (149.0 / 648.0) * cube(q) - (13.0 / 54.0) * q * q + (7.0 / 81.0) * q -
         1.0 / 81.0;
  return c;
}

double evaluate_charpoly(const CharPolyCoeffs& c, double lambda) {
  return (((lambda + c.c3) * lambda + c.c2) * lambda + c.c1) * lambda + c.c0;
}

double measure_pure(MeasureKind kind, const Ray& ray) {
  return kind == MeasureKind::Tangle ? tangle_closed(ray) : pi_pure(ray);
}

double w_state_value(MeasureKind kind) {
  if (kind == MeasureKind::Tangle) return 0.0;
  return (4.0 / 9.0) * (std::sqrt(5.0) - 1.0);
}

namespace {

double tangle_dq(double q) {
  const double f = tangle_signed_argument(q);
  const double fp = 2.0 * q - (4.0 * std::sqrt(6.0) / 9.0) * (1.0 - 4.0 * q) *
                                  std::sqrt((1.0 - q) / q);
  return (f >= 0.0 ? fp : -fp);
}

double pi_dq(double q) {
  const Ray ray = make_ray(q, 0.0);
  const CMatrix a = pt_pair_marginal(ray);

  // d/dq of the pair marginal at theta = 0, entry by entry, then the same
  // partial transpose. m = sqrt(q(1-q)/6), dm/dq = (1-2q)/(12 m).
  const double m = std::sqrt(q * (1.0 - q) / 6.0);
  const double dm = (1.0 - 2.0 * q) / (12.0 * m);
  CMatrix drho(4);
  drho(0, 0) = 1.0 / 6.0;
  drho(0, 1) = drho(0, 2) = drho(0, 3) = -dm;
  drho(1, 0) = drho(2, 0) = drho(3, 0) = -dm;
  drho(1, 1) = drho(1, 2) = drho(2, 1) = drho(2, 2) = -1.0 / 3.0;
  drho(3, 3) = 0.5;
  const CMatrix da = partial_transpose_first(drho);

  const EigenSystem es = hermitian_eigensystem(a);
  double neg = 0.0;
  double dneg = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double sgn = es.values[k] >= 0.0 ? 1.0 : -1.0;
    neg += std::abs(es.values[k]);
    cplx quad = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        quad += std::conj(es.vectors[k][i]) * da(i, j) * es.vectors[k][j];
    dneg += sgn * quad.real();
  }
  neg -= 1.0;  // trace of the partial transpose is 1

  return (10.0 * q - 4.0) / 9.0 - 4.0 * neg * dneg;
}

}  // namespace

double measure_pure_dq(MeasureKind kind, double q) {
  if (!(q > 1e-6 && q < 1.0 - 1e-6))
    throw std::domain_error("measure_pure_dq: q too close to an endpoint");
  return kind == MeasureKind::Tangle ? tangle_dq(q) : pi_dq(q);
}

}  // namespace ghzw
