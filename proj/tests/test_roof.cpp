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
#include "roof.hpp"

using ghzw::Branch;
using ghzw::make_ray;
using ghzw::MeasureKind;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kQ0Tangle = 0.6268510148499474;  // 4*2^(1/3)/(3+4*2^(1/3))
constexpr double kQ1Tangle = 0.7086825030920757;  // 1/2 + 3*sqrt(465)/310
constexpr double kQ0Pi = 0.5639425029410772;
constexpr double kQ1Pi = 0.9633152553433674;
}  // namespace

TEST_CASE("analytic tangle split points") {
  CHECK(ghzw::tangle_q_star0_analytic() ==
        doctest::Approx(kQ0Tangle).epsilon(1e-15));
  CHECK(ghzw::tangle_q_star1_analytic() ==
        doctest::Approx(kQ1Tangle).epsilon(1e-15));
}

TEST_CASE("numeric critical points, tangle") {
  const ghzw::CriticalPoints cp =
      ghzw::find_critical_points(MeasureKind::Tangle);
  CHECK(std::abs(cp.q_star0 - kQ0Tangle) < 1e-6);
  CHECK(std::abs(cp.q_star1 - kQ1Tangle) < 1e-6);
  CHECK(cp.theta_star == 0.0);
  CHECK(cp.q_star0 < cp.q_star1);
}

TEST_CASE("numeric critical points, pi") {
  const ghzw::CriticalPoints cp = ghzw::find_critical_points(MeasureKind::Pi);
  CHECK(std::abs(cp.q_star0 - kQ0Pi) < 1e-6);
  CHECK(std::abs(cp.q_star1 - kQ1Pi) < 1e-6);
  CHECK(cp.theta_star == 0.0);
}

TEST_CASE("critical points do not depend on the probing weight") {
  for (const MeasureKind kind : {MeasureKind::Tangle, MeasureKind::Pi}) {
    const auto a = ghzw::find_critical_points_at(kind, 0.25);
    const auto b = ghzw::find_critical_points_at(kind, 0.75);
    CHECK(std::abs(a.q_star0 - b.q_star0) < 1e-7);
    CHECK(std::abs(a.q_star1 - b.q_star1) < 1e-7);
  }
  CHECK_THROWS_AS(ghzw::find_critical_points_at(MeasureKind::Pi, 0.0),
                  std::invalid_argument);
}

TEST_CASE("branch values and gating") {
  // Three-ray branch equals the aligned pure value.
  for (const MeasureKind kind : {MeasureKind::Tangle, MeasureKind::Pi})
    for (const double p : {0.2, 0.5, 0.8})
      CHECK(ghzw::e_opt3(kind, p) ==
            doctest::Approx(ghzw::measure_pure(kind, make_ray(p, 0.0))));

  // W-vertex branch vanishes for the tangle at the signed-argument root.
  CHECK(std::abs(ghzw::e_opt40(MeasureKind::Tangle, 0.3, kQ0Tangle)) < 1e-12);

  // GHZ-vertex branch interpolates to 1 at p = 1.
  CHECK(ghzw::e_opt41(MeasureKind::Tangle, 1.0, kQ1Tangle) ==
        doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(ghzw::e_opt40(MeasureKind::Pi, 0.7, 0.5), std::domain_error);
  CHECK_THROWS_AS(ghzw::e_opt41(MeasureKind::Pi, 0.3, 0.5), std::domain_error);
  CHECK_THROWS_AS(ghzw::e_opt40(MeasureKind::Pi, 0.0, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(ghzw::e_opt41(MeasureKind::Pi, 1.0, 1.0),
                  std::invalid_argument);
}

TEST_CASE("piecewise tangle roof") {
  // Zero plateau up to the first split point.
  for (int i = 0; i <= 500; ++i) {
    const double p = kQ0Tangle * i / 500.0;
    CHECK(ghzw::tangle_mixed_closed(p) <= 1e-12);
  }
  // Middle window follows the pure curve.
  CHECK(ghzw::tangle_mixed_closed(0.65) ==
        doctest::Approx(0.05901888836073133).epsilon(1e-12));
  CHECK(ghzw::tangle_mixed_closed(0.69) ==
        doctest::Approx(ghzw::tangle_closed(make_ray(0.69, 0.0))));
  // Linear segment beyond the second split point.
  CHECK(ghzw::tangle_mixed_closed(0.75) ==
        doctest::Approx(0.3255019631548913).epsilon(1e-12));
  CHECK(ghzw::tangle_mixed_closed(0.9) ==
        doctest::Approx(0.7302007852619566).epsilon(1e-12));
  CHECK(ghzw::tangle_mixed_closed(1.0) == doctest::Approx(1.0));

  // Non-decreasing.
  double prev = -1.0;
  for (int i = 0; i <= 1000; ++i) {
    const double v = ghzw::tangle_mixed_closed(i / 1000.0);
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
}

TEST_CASE("piecewise pi roof") {
  CHECK(ghzw::pi_mixed_closed(0.0) ==
        doctest::Approx(0.5493635455554621).epsilon(1e-12));
  CHECK(ghzw::pi_mixed_closed(1.0) == doctest::Approx(1.0));
  CHECK(ghzw::pi_mixed_closed(0.25) ==
        doctest::Approx(0.5279382393568706).epsilon(1e-9));
  CHECK(ghzw::pi_mixed_closed(0.5) ==
        doctest::Approx(0.506512933158279).epsilon(1e-9));
  CHECK(ghzw::pi_mixed_closed(0.75) ==
        doctest::Approx(0.5747541535904217).epsilon(1e-9));
  CHECK(ghzw::pi_mixed_closed(0.95) ==
        doctest::Approx(0.8894401023411654).epsilon(1e-9));

  // First segment is linear: midpoint value matches endpoint interpolation.
  const double a = ghzw::pi_mixed_closed(0.1);
  const double b = ghzw::pi_mixed_closed(0.3);
  CHECK(ghzw::pi_mixed_closed(0.2) == doctest::Approx((a + b) / 2.0).epsilon(1e-12));

  // Interior minimum exists and undercuts both endpoints.
  double best = 2.0, best_p = -1.0;
  for (int i = 0; i <= 4000; ++i) {
    const double p = i / 4000.0;
    const double v = ghzw::pi_mixed_closed(p);
    if (v < best) {
      best = v;
      best_p = p;
    }
  }
  CHECK(best < ghzw::pi_mixed_closed(0.0));
  CHECK(best < 1.0);
  CHECK(best == doctest::Approx(0.5002235458167621).epsilon(1e-7));
  CHECK(best_p == doctest::Approx(0.5826614255745572).epsilon(1e-3));
}

TEST_CASE("roof evaluation labels the winning branch") {
  CHECK(ghzw::roof_eval(MeasureKind::Tangle, 0.5).branch == Branch::Opt40);
  CHECK(ghzw::roof_eval(MeasureKind::Tangle, 0.65).branch == Branch::Opt3);
  CHECK(ghzw::roof_eval(MeasureKind::Tangle, 0.75).branch == Branch::Opt41);
  CHECK(ghzw::roof_eval(MeasureKind::Pi, 0.5).branch == Branch::Opt40);
  CHECK(ghzw::roof_eval(MeasureKind::Pi, 0.75).branch == Branch::Opt3);
  CHECK(ghzw::roof_eval(MeasureKind::Pi, 0.97).branch == Branch::Opt41);
  CHECK(ghzw::roof_eval(MeasureKind::Pi, 0.0).branch == Branch::Opt40);
  CHECK(ghzw::roof_eval(MeasureKind::Pi, 1.0).branch == Branch::Opt41);

  CHECK(std::string(ghzw::branch_name(Branch::Opt3)) == "opt3");
  CHECK(std::string(ghzw::branch_name(Branch::Opt40)) == "opt40");
  CHECK(std::string(ghzw::branch_name(Branch::Opt41)) == "opt41");

  // The labeled evaluation agrees with the piecewise closed form.
  for (int i = 0; i <= 100; ++i) {
    const double p = i / 100.0;
    CHECK(std::abs(ghzw::roof_value(MeasureKind::Tangle, p) -
                   ghzw::tangle_mixed_closed(p)) < 1e-9);
    CHECK(std::abs(ghzw::roof_value(MeasureKind::Pi, p) -
                   ghzw::pi_mixed_closed(p)) < 1e-9);
  }

  CHECK_THROWS_AS(ghzw::roof_eval(MeasureKind::Pi, -0.01),
                  std::invalid_argument);
  CHECK_THROWS_AS(ghzw::roof_eval(MeasureKind::Pi, 1.01),
                  std::invalid_argument);
}

TEST_CASE("pi dominates tangle for mixtures") {
  for (int i = 0; i <= 200; ++i) {
    const double p = i / 200.0;
    CHECK(ghzw::pi_mixed_closed(p) >= ghzw::tangle_mixed_closed(p) - 1e-10);
  }
}

TEST_CASE("optimal decompositions reconstruct the mixture") {
  for (const MeasureKind kind : {MeasureKind::Tangle, MeasureKind::Pi}) {
    for (int i = 0; i <= 20; ++i) {
      const double p = i / 20.0;
      const ghzw::WeightedEnsemble e = ghzw::build_decomposition(kind, p);
      const ghzw::DecompositionCheck ck = ghzw::verify_decomposition(e, p, kind);
      CHECK(ck.residual < 1e-10);
      CHECK(ck.spread < 1e-10);

      // The ensemble average reproduces the closed-form roof value.
      double avg = 0.0;
      for (const auto& en : e.entries)
        avg += en.weight * ghzw::measure_pure(kind, en.ray);
      CHECK(std::abs(avg - ghzw::mixed_closed(kind, p)) < 1e-9);
    }
  }
}

TEST_CASE("decomposition shapes per window") {
  // W vertex plus an equal-weight phase triple below the first split point.
  const auto low = ghzw::build_decomposition(MeasureKind::Tangle, 0.3);
  REQUIRE(low.entries.size() == 4);
  CHECK(low.entries[0].ray.q == 0.0);
  CHECK(low.entries[0].weight ==
        doctest::Approx((kQ0Tangle - 0.3) / kQ0Tangle).epsilon(1e-9));
  for (int k = 1; k <= 3; ++k) {
    CHECK(low.entries[k].ray.q == doctest::Approx(kQ0Tangle).epsilon(1e-7));
    CHECK(low.entries[k].weight ==
          doctest::Approx(0.3 / (3.0 * kQ0Tangle)).epsilon(1e-9));
    CHECK(low.entries[k].ray.theta ==
          doctest::Approx(2.0 * kPi * (k - 1) / 3.0));
  }

  // Pure phase triple in the middle window.
  const auto mid = ghzw::build_decomposition(MeasureKind::Pi, 0.75);
  REQUIRE(mid.entries.size() == 3);
  for (const auto& en : mid.entries) {
    CHECK(en.weight == doctest::Approx(1.0 / 3.0));
    CHECK(en.ray.q == doctest::Approx(0.75));
  }

  // GHZ vertex plus a phase triple beyond the second split point.
  const auto high = ghzw::build_decomposition(MeasureKind::Tangle, 0.9);
  REQUIRE(high.entries.size() == 4);
  CHECK(high.entries[0].ray.q == 1.0);
  CHECK(high.entries[0].weight ==
        doctest::Approx((0.9 - kQ1Tangle) / (1.0 - kQ1Tangle)).epsilon(1e-7));

  // A mismatched mixing weight is detected.
  const auto wrong = ghzw::verify_decomposition(low, 0.6, MeasureKind::Tangle);
  CHECK(wrong.residual > 1e-3);
}

TEST_CASE("branch derivatives: analytic equals finite differences") {
  // Pinned independent values.
  CHECK(ghzw::branch_derivative_analytic(MeasureKind::Pi, 0.3, 0.52, 40) ==
        doctest::Approx(-0.10923464843770603).epsilon(1e-9));
  CHECK(ghzw::branch_derivative_analytic(MeasureKind::Pi, 0.5, 0.8, 41) ==
        doctest::Approx(-1.4950800159008182).epsilon(1e-9));

  const double h = 1e-5;
  for (const MeasureKind kind : {MeasureKind::Tangle, MeasureKind::Pi}) {
    for (int i = 0; i < 12; ++i) {
      const double q = 0.15 + 0.7 * i / 11.0;
      if (kind == MeasureKind::Tangle && std::abs(q - kQ0Tangle) < 0.05)
        continue;  // kink of |signed argument|
      const double p40 = 0.6 * q;
      const double an40 = ghzw::branch_derivative_analytic(kind, p40, q, 40);
      const double fd40 = ghzw::branch_derivative_fd(kind, p40, q, 40, h);
      if (std::abs(fd40) > 1e-4)
        CHECK(std::abs(an40 - fd40) / std::abs(fd40) < 1e-5);

      const double p41 = q + 0.6 * (1.0 - q);
      const double an41 = ghzw::branch_derivative_analytic(kind, p41, q, 41);
      const double fd41 = ghzw::branch_derivative_fd(kind, p41, q, 41, h);
      if (std::abs(fd41) > 1e-4)
        CHECK(std::abs(an41 - fd41) / std::abs(fd41) < 1e-5);
    }
  }

  CHECK_THROWS_AS(
      ghzw::branch_derivative_analytic(MeasureKind::Pi, 0.3, 0.5, 39),
      std::invalid_argument);
}

TEST_CASE("pi branch derivative vanishes at its split points") {
  const auto cp = ghzw::find_critical_points(MeasureKind::Pi);
  CHECK(std::abs(ghzw::branch_derivative_analytic(MeasureKind::Pi, 0.3,
                                                  cp.q_star0, 40)) < 1e-6);
  CHECK(std::abs(ghzw::branch_derivative_analytic(MeasureKind::Pi, 0.98,
                                                  cp.q_star1, 41)) < 1e-6);
}

TEST_CASE("first-segment slope of the pi roof") {
  // The W-vertex segment is affine in p with a negative slope, so the
  // mixture measure initially decreases.
  const double h = 1e-6;
  const double slope =
      (ghzw::pi_mixed_closed(0.3 + h) - ghzw::pi_mixed_closed(0.3 - h)) /
      (2.0 * h);
  CHECK(slope == doctest::Approx(-0.08570122479436605).epsilon(1e-5));
}
