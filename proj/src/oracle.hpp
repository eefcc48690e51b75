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

#ifndef GHZW_ORACLE_HPP
#define GHZW_ORACLE_HPP

#include <cstdint>

#include "measures.hpp"

namespace ghzw {

struct SearchResult {
  double value;              // best average entanglement found
  WeightedEnsemble ensemble; // the decomposition achieving it
  int restarts_used;         // restarts actually run (early exit at ~0)
  bool converged;            // best restart ended by simplex collapse
};

// Brute-force minimization of the average entanglement over n-state
// decompositions of the GHZ/W mixture. Candidate ensembles come from the
// purification-ensemble parametrization: an n x 2 complex matrix with
// orthonormal columns applied to the subnormalized eigenvectors
// sqrt(p)|GHZ>, sqrt(1-p)|W>; every candidate state therefore lies in the
// GHZ/W span and projects exactly to its (q, theta) coordinates.
// Derivative-free (Nelder-Mead with two polish stages) from seeded random
// starts; deterministic for a fixed seed. n_states must be within [2, 4]
// (four states always suffice for a rank-2 mixture).
SearchResult oracle_search(MeasureKind kind, double p, int n_states,
                           int restarts, std::uint64_t seed);

}  // namespace ghzw

#endif
