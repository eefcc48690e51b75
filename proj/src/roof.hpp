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

#ifndef GHZW_ROOF_HPP
#define GHZW_ROOF_HPP

#include "measures.hpp"

namespace ghzw {

// Family parameters delimiting the three regimes of the piecewise roof:
// q_star0 minimizes the W-vertex branch, q_star1 the GHZ-vertex branch.
// The phase minimizer theta_star is 0 for both measures.
struct CriticalPoints {
  double q_star0;
  double q_star1;
  double theta_star;
  MeasureKind measure;
};

enum class Branch { Opt3, Opt40, Opt41 };

const char* branch_name(Branch b);

struct RoofBranches {
  double opt3;
  bool has_opt40;
  double opt40;
  bool has_opt41;
  double opt41;
};

struct RoofResult {
  double value;
  Branch branch;
};

// Average entanglement of the three-state decomposition: the measure at
// (p, 0) itself, by phase periodicity.
double e_opt3(MeasureKind kind, double p);

// W vertex plus a phase triple at q: ((q-p)/q) E_W + (p/q) E(q,0).
// Valid for 0 < q < 1 and 0 <= p <= q; p > q is a domain error.
double e_opt40(MeasureKind kind, double p, double q);

// GHZ vertex plus a phase triple at q: ((p-q)/(1-q)) + ((1-p)/(1-q)) E(q,0).
// Valid for 0 < q < 1 and q <= p <= 1; p < q is a domain error.
double e_opt41(MeasureKind kind, double p, double q);

// d/dq of the selected branch (which is 40 or 41), closed form.
double branch_derivative_analytic(MeasureKind kind, double p, double q, int which);

// Central finite difference of the same branch; q +/- h must stay inside
// the branch's validity window.
double branch_derivative_fd(MeasureKind kind, double p, double q, int which,
                            double h);

// Locates q_star0 and q_star1 by golden-section search on [1e-9, 1-1e-9]
// (tolerance 1e-10), with a coarse bracketing scan and, for the tangle, a
// bisection on the sign change of the closed form's modulus argument so the
// kink minimum is hit to machine precision. The reference p drops out of
// the argmin; find_critical_points uses p_ref = 0.5.
CriticalPoints find_critical_points(MeasureKind kind);
CriticalPoints find_critical_points_at(MeasureKind kind, double p_ref);

// Lazily computed, thread-safe per-measure cache of the above.
const CriticalPoints& critical_points_cached(MeasureKind kind);

// Analytic values of the tangle critical points:
// 4 * 2^(1/3) / (3 + 4 * 2^(1/3)) and 1/2 + (3/310) sqrt(465).
double tangle_q_star0_analytic();
double tangle_q_star1_analytic();

RoofBranches roof_branches(MeasureKind kind, double p);

// min over the branches valid at p; the branch label prefers the vertex
// branches on ties so joints report the decomposition actually constructed.
RoofResult roof_eval(MeasureKind kind, double p);
double roof_value(MeasureKind kind, double p);

// Piecewise closed forms of the mixed-state measures. The tangle version
// uses the analytic critical points (its first branch is exactly zero);
// the pi version uses the cached numeric ones.
double tangle_mixed_closed(double p);
double pi_mixed_closed(double p);
double mixed_closed(MeasureKind kind, double p);

// The decomposition behind roof_eval's winning region: a phase triple at
// (p, {0, 2pi/3, 4pi/3}), optionally replaced by a W- or GHZ-anchored
// four-state ensemble below q_star0 / above q_star1.
WeightedEnsemble build_decomposition(MeasureKind kind, double p);

struct DecompositionCheck {
  double residual;  // max-norm gap to the target mixture
  double spread;    // max - min of weight * E over the non-vertex entries
};

DecompositionCheck verify_decomposition(const WeightedEnsemble& e, double p,
                                        MeasureKind kind);

}  // namespace ghzw

#endif
