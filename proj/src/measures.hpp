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

#ifndef GHZW_MEASURES_HPP
#define GHZW_MEASURES_HPP

#include "states.hpp"

namespace ghzw {

enum class MeasureKind { Tangle, Pi };

// Three-tangle of a family member, closed form:
// |q^2 - (8/9) e^{3i theta} sqrt(6 q (1-q)^3)|.
double tangle_closed(const Ray& ray);

// Signed argument of the modulus above at theta = 0:
// f(q) = q^2 - (8/9) sqrt(6 q (1-q)^3). The closed form has a kink where
// this changes sign.
double tangle_signed_argument(double q);

// Three-tangle of an arbitrary three-qubit pure state via the degree-4
// amplitude invariant, 4|d1 - 2 d2 + 4 d3|. Independent of tangle_closed.
double tangle_vector(const PureState& psi);

// Concurrence across the a|(bc) cut, sqrt(2 (1 - Tr rho_a^2)), computed
// from the one-qubit marginal. Independent of theta on the family.
double concurrence_a_bc(const Ray& ray);

// The same concurrence evaluated from the family polynomial
// sqrt((5 q^2 - 4 q + 8) / 9); used as the second, matrix-free path.
double concurrence_closed(double q);

// Negativity of the two-qubit marginal: trace norm of the partial
// transpose minus one.
double negativity_ab(const Ray& ray);

// Three-pi of a family member: concurrence^2 - 2 * negativity^2 (all three
// one-vs-two cuts coincide on this family).
double pi_pure(const Ray& ray);

// Two-qubit marginal rho_ab of a family member, and its partial transpose
// on the first qubit.
CMatrix pair_marginal(const Ray& ray);
CMatrix pt_pair_marginal(const Ray& ray);

// Monic quartic lambda^4 + c3 lambda^3 + c2 lambda^2 + c1 lambda + c0.
struct CharPolyCoeffs {
  double c3;
  double c2;
  double c1;
  double c0;
};

// Closed-form characteristic polynomial of the partially
// transposed two-qubit marginal, as a function of q and cos(3 theta).
// Kept as a cross-check; the matrix path is authoritative.
CharPolyCoeffs pt_charpoly(double q, double cos3theta);

double evaluate_charpoly(const CharPolyCoeffs& c, double lambda);

double measure_pure(MeasureKind kind, const Ray& ray);

// Measure value at the q=0 endpoint (the W vertex): 0 for the tangle,
// (4/9)(sqrt(5)-1) for three-pi (the latter is the trace-norm excess of the
// partially transposed W marginal, squared into the pi formula).
double w_state_value(MeasureKind kind);

// d/dq of measure_pure(kind, (q, 0)), analytic. For the tangle this is
// sign(f) f'; for pi the eigenvalue derivatives come from first-order
// perturbation of the partially transposed marginal. Requires
// 1e-6 < q < 1 - 1e-6 (the derivative is singular at the endpoints).
double measure_pure_dq(MeasureKind kind, double q);

}  // namespace ghzw

#endif
