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

#include "checks.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>

namespace ghzw {

namespace {

std::string fmt(const char* f, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

}  // namespace

CheckGroupResult check_periodicity() {
  double worst = 0.0;
  double wq = 0.0, wt = 0.0;
  for (int iq = 0; iq < 50; ++iq) {
    const double q = iq / 49.0;
    for (int it = 0; it < 50; ++it) {
      const double t = kTwoPi * it / 50.0;
      for (MeasureKind kind : {MeasureKind::Tangle, MeasureKind::Pi}) {
        const double a = measure_pure(kind, make_ray(q, t));
        const double b = measure_pure(kind, make_ray(q, t + kTwoPi / 3.0));
        const double dev = std::abs(a - b);
        if (dev > worst) {
          worst = dev;
          wq = q;
          wt = t;
        }
      }
    }
  }
  return CheckGroupResult{
      "periodicity", worst <= 1e-10,
      fmt("max |E(q,t)-E(q,t+2pi/3)| = %.3e at (q=%.4f, theta=%.4f), tol 1e-10",
          worst, wq, wt)};
}

CheckGroupResult check_dominance() {
  double worst = 1.0;
  double wq = 0.0, wt = 0.0;
  for (int iq = 0; iq < 101; ++iq) {
    const double q = iq / 100.0;
    for (int it = 0; it < 121; ++it) {
      const double t = kTwoPi * it / 120.0;
      const Ray ray = make_ray(q, t);
      const double gap = pi_pure(ray) - tangle_closed(ray);
      if (gap < worst) {
        worst = gap;
        wq = q;
        wt = t;
      }
    }
  }
  return CheckGroupResult{
      "dominance", worst >= -1e-10,
      fmt("min (pi - tangle) = %.3e at (q=%.4f, theta=%.4f), tol -1e-10",
          worst, wq, wt)};
}

CheckGroupResult check_reconstruction() {
  double worst_res = 0.0;
  double worst_spread = 0.0;
  for (MeasureKind kind : {MeasureKind::Tangle, MeasureKind::Pi}) {
    for (int i = 0; i <= 20; ++i) {
      const double p = i / 20.0;
      const WeightedEnsemble e = build_decomposition(kind, p);
      const DecompositionCheck ck = verify_decomposition(e, p, kind);
      worst_res = std::max(worst_res, ck.residual);
      worst_spread = std::max(worst_spread, ck.spread);
    }
  }
  const bool ok = worst_res <= 1e-10 && worst_spread <= 1e-10;
  return CheckGroupResult{
      "reconstruction", ok,
      fmt("max residual = %.3e, max equal-share spread = %.3e, tol 1e-10",
          worst_res, worst_spread)};
}

CheckGroupResult check_gradients(const BranchDerivativeFn& analytic) {
  const double h = 1e-5;
  const double kink = tangle_q_star0_analytic();
  double worst = 0.0;
  double wq = 0.0;
  int wwhich = 0;
  for (MeasureKind kind : {MeasureKind::Tangle, MeasureKind::Pi}) {
    for (int which : {40, 41}) {
      int taken = 0;
      for (int i = 0; i <= 40 && taken < 20; ++i) {
        const double q = 0.1 + 0.8 * i / 40.0;
        if (kind == MeasureKind::Tangle && std::abs(q - kink) < 0.05) continue;
        const double p = which == 40 ? 0.6 * q : q + 0.6 * (1.0 - q);
        const double fd = branch_derivative_fd(kind, p, q, which, h);
        if (std::abs(fd) < 1e-4) continue;  // relative error needs a scale
        const double an = analytic(kind, p, q, which);
        const double rel = std::abs(an - fd) / std::abs(fd);
        ++taken;
        if (rel > worst) {
          worst = rel;
          wq = q;
          wwhich = which;
        }
      }
      if (taken < 20)
        return CheckGroupResult{"gradients", false,
                                fmt("could not collect 20 sample points for "
                                    "branch %d", which)};
    }
  }
  return CheckGroupResult{
      "gradients", worst <= 1e-5,
      fmt("max relative analytic-vs-fd deviation = %.3e at (q=%.4f, "
          "branch %d), tol 1e-5",
          worst, wq, wwhich)};
}

CheckGroupResult check_charpoly() {
  double worst = 0.0;
  double wq = 0.0, wt = 0.0;
  for (int iq = 0; iq <= 20; ++iq) {
    const double q = iq / 20.0;
    for (int it = 0; it < 17; ++it) {
      const double t = kTwoPi * it / 17.0;
      const Ray ray = make_ray(q, t);
      const std::vector<double> eig = hermitian_eigenvalues(pt_pair_marginal(ray));
      const CharPolyCoeffs c = pt_charpoly(q, std::cos(3.0 * t));
      double prod = 1.0;
      for (double lam : eig) {
        prod *= lam;
        const double res = std::abs(evaluate_charpoly(c, lam));
        if (res > worst) {
          worst = res;
          wq = q;
          wt = t;
        }
      }
      const double vieta = std::abs(prod - c.c0);
      if (vieta > worst) {
        worst = vieta;
        wq = q;
        wt = t;
      }
    }
  }
  const bool ok = worst <= 1e-8;
  std::string detail =
      fmt("max closed-form quartic residual = %.3e at (q=%.4f, theta=%.4f), "
          "tol 1e-8",
          worst, wq, wt);
  if (!ok)
    detail +=
        "; closed-form coefficients disagree with the computed spectrum - "
        "the partial-transpose matrix path is authoritative and stays in use";
  return CheckGroupResult{"charpoly", ok, detail};
}

std::vector<CheckGroupResult> run_invariant_checks() {
  return {check_periodicity(), check_dominance(), check_reconstruction(),
          check_gradients(branch_derivative_analytic), check_charpoly()};
}

}  // namespace ghzw
