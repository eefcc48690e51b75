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

#ifndef GHZW_CHECKS_HPP
#define GHZW_CHECKS_HPP

#include <functional>
#include <string>
#include <vector>

#include "roof.hpp"

namespace ghzw {

struct CheckGroupResult {
  std::string name;
  bool passed;
  std::string detail;
};

// Phase periodicity of both pure measures under theta -> theta + 2pi/3 on a
// 50x50 grid, tolerance 1e-10.
CheckGroupResult check_periodicity();

// pi >= tangle - 1e-10 for pure states on a 101x121 grid.
CheckGroupResult check_dominance();

// build_decomposition reconstructs the mixture within 1e-10 max-norm and
// its phase triples carry equal weight*entanglement within 1e-10, both
// measures, 21 p-values.
CheckGroupResult check_reconstruction();

// Analytic branch derivatives against central finite differences
// (h = 1e-5, relative tolerance 1e-5) at 20 points per branch and measure.
// The derivative function is injectable so a deliberately wrong form is
// detectable by the suite's own failure.
using BranchDerivativeFn =
    std::function<double(MeasureKind, double, double, int)>;
CheckGroupResult check_gradients(const BranchDerivativeFn& analytic);

// Closed-form characteristic polynomial against the numerically
// computed spectrum of the partially transposed marginal, residual and
// Vieta product within 1e-8 on a 21x17 grid. On failure the detail names
// the matrix path as authoritative.
CheckGroupResult check_charpoly();

// All five groups with the production derivative.
std::vector<CheckGroupResult> run_invariant_checks();

}  // namespace ghzw

#endif
