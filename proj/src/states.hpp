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

#ifndef GHZW_STATES_HPP
#define GHZW_STATES_HPP

#include <array>
#include <vector>

#include "common.hpp"
#include "linalg.hpp"

namespace ghzw {

// Three-qubit pure state: 8 amplitudes indexed by |abc> with qubit a most
// significant (index = 4a + 2b + c).
using PureState = std::array<cplx, 8>;

// Point (q, theta) of the two-parameter family
// sqrt(q)|GHZ> - sqrt(1-q) e^{i theta}|W>.
struct Ray {
  double q;
  double theta;
};

// Validates and canonicalizes: q clamped to [0,1] (tolerance 1e-12 outside),
// theta reduced to [0, 2*pi). Non-finite or out-of-range inputs throw
// std::invalid_argument.
Ray make_ray(double q, double theta);

PureState make_ghz();
PureState make_w();
PureState superpose(const Ray& ray);

double norm(const PureState& psi);
cplx overlap(const PureState& a, const PureState& b);

// Rank-1 projector |psi><psi| as an 8x8 matrix. psi must be unit norm
// within 1e-12.
CMatrix density(const PureState& psi);

// p |GHZ><GHZ| + (1-p) |W><W|. p outside [0,1] (tolerance 1e-12) throws.
CMatrix mixture_density(double p);

enum class Subsystems { A, B, C, AB, BC, AC };

// Reduced density matrix over the kept subsystems; kept indices keep their
// a,b,c significance order. Input must be 8x8.
CMatrix partial_trace(const CMatrix& rho, Subsystems keep);

// Partial transpose on the first qubit of a 4x4 two-qubit matrix with
// row/column index 2*i_first + j_second: out(ij,kl) = in(kj,il).
CMatrix partial_transpose_first(const CMatrix& rho_pair);

struct EnsembleEntry {
  double weight;
  Ray ray;
};

// Candidate decomposition of the GHZ/W mixture: at most 4 weighted family
// members, weights nonnegative and summing to 1 within 1e-10.
struct WeightedEnsemble {
  std::vector<EnsembleEntry> entries;
};

void validate_ensemble(const WeightedEnsemble& e);

// Sum of weight * density(superpose(ray)) over the ensemble.
CMatrix ensemble_density(const WeightedEnsemble& e);

}  // namespace ghzw

#endif
