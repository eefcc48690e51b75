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
#include <stdexcept>

#include "doctest.h"
#include "linalg.hpp"
#include "oracle.hpp"
#include "roof.hpp"
#include "states.hpp"

using ghzw::MeasureKind;

TEST_CASE("same seed reproduces the search bit for bit") {
  const auto a = ghzw::oracle_search(MeasureKind::Pi, 0.45, 3, 6, 11);
  const auto b = ghzw::oracle_search(MeasureKind::Pi, 0.45, 3, 6, 11);
  CHECK(a.value == b.value);  // exact, not approximate
  REQUIRE(a.ensemble.entries.size() == b.ensemble.entries.size());
  for (size_t i = 0; i < a.ensemble.entries.size(); ++i) {
    CHECK(a.ensemble.entries[i].weight == b.ensemble.entries[i].weight);
    CHECK(a.ensemble.entries[i].ray.q == b.ensemble.entries[i].ray.q);
    CHECK(a.ensemble.entries[i].ray.theta == b.ensemble.entries[i].ray.theta);
  }
}

TEST_CASE("rank-1 endpoints collapse to a single ray") {
  const auto ghz = ghzw::oracle_search(MeasureKind::Tangle, 1.0, 3, 4, 5);
  REQUIRE(ghz.ensemble.entries.size() == 1);
  CHECK(ghz.ensemble.entries[0].ray.q == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ghz.value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(ghz.converged);

  const auto w = ghzw::oracle_search(MeasureKind::Pi, 0.0, 3, 4, 5);
  REQUIRE(w.ensemble.entries.size() == 1);
  CHECK(w.ensemble.entries[0].ray.q == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(w.value == doctest::Approx(0.5493635455554621).epsilon(1e-10));

  const auto wt = ghzw::oracle_search(MeasureKind::Tangle, 0.0, 2, 4, 5);
  CHECK(wt.value < 1e-10);
}

TEST_CASE("search confirms the zero plateau of the tangle roof") {
  const auto r = ghzw::oracle_search(MeasureKind::Tangle, 0.3, 4, 16, 7);
  CHECK(r.value <= 1e-6);
  CHECK(r.converged);
  CHECK(r.restarts_used <= 16);
}

TEST_CASE("search matches the closed form in the middle window") {
  const auto r = ghzw::oracle_search(MeasureKind::Pi, 0.6, 3, 12, 3);
  const double closed = ghzw::pi_mixed_closed(0.6);
  CHECK(std::abs(r.value - closed) < 5e-4);
  // The roof is a minimum over decompositions, so no search may go below it.
  CHECK(r.value >= closed - 1e-9);
}

TEST_CASE("returned ensemble really decomposes the mixture") {
  const auto r = ghzw::oracle_search(MeasureKind::Tangle, 0.8, 4, 8, 19);
  const ghzw::CMatrix rho = ghzw::ensemble_density(r.ensemble);
  const ghzw::CMatrix target = ghzw::mixture_density(0.8);
  double worst = 0.0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      worst = std::max(worst, std::abs(rho(i, j) - target(i, j)));
  CHECK(worst < 1e-8);

  double total = 0.0;
  for (const auto& en : r.ensemble.entries) {
    CHECK(en.weight > 0.0);
    total += en.weight;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));

  // Ensemble average equals the reported value.
  double avg = 0.0;
  for (const auto& en : r.ensemble.entries)
    avg += en.weight * ghzw::measure_pure(MeasureKind::Tangle, en.ray);
  CHECK(avg == doctest::Approx(r.value).epsilon(1e-9));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(ghzw::oracle_search(MeasureKind::Pi, -0.5, 3, 4, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(ghzw::oracle_search(MeasureKind::Pi, 1.5, 3, 4, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(ghzw::oracle_search(MeasureKind::Pi, 0.5, 1, 4, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(ghzw::oracle_search(MeasureKind::Pi, 0.5, 5, 4, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(ghzw::oracle_search(MeasureKind::Pi, 0.5, 3, 0, 1),
                  std::invalid_argument);
}
