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

#include "roof.hpp"

#include <algorithm>
#include <cmath>

namespace ghzw {

namespace {

constexpr double kEdge = 1e-9;       // search interval is [kEdge, 1-kEdge]
constexpr double kGoldenTol = 1e-10;

double checked_p(double p) {
  if (!std::isfinite(p) || p < -1e-12 || p > 1.0 + 1e-12)
    throw std::invalid_argument("p outside [0,1]");
  return clamp01(p);
}

// Branch formulas without the p-vs-q validity gate; used by the critical
// point search, whose argmin is independent of the reference p.
double b40_raw(MeasureKind kind, double p, double q) {
  return ((q - p) / q) * w_state_value(kind) +
         (p / q) * measure_pure(kind, make_ray(q, 0.0));
}

double b41_raw(MeasureKind kind, double p, double q) {
  return (p - q) / (1.0 - q) +
         ((1.0 - p) / (1.0 - q)) * measure_pure(kind, make_ray(q, 0.0));
}

template <typename F>
double golden_min(const F& f, double a, double b) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double invphi2 = (3.0 - std::sqrt(5.0)) / 2.0;
  double h = b - a;
  double c = a + invphi2 * h;
  double d = a + invphi * h;
  double fc = f(c);
  double fd = f(d);
  while (h > kGoldenTol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      h = b - a;
      c = a + invphi2 * h;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      h = b - a;
      d = a + invphi * h;
      fd = f(d);
    }
  }
  return fc < fd ? c : d;
}

// Golden section over the full interval, then refined inside the bracket
// around the best point of a coarse scan; the lower of the two survives.
// The scan guards against the full-interval pass settling on the wrong
// side of a non-unimodal objective.
template <typename F>
double minimize_1d(const F& f, double lo, double hi) {
  const double direct = golden_min(f, lo, hi);

  const int n = 2000;
  int best = 0;
  double best_val = f(lo);
  for (int i = 1; i <= n; ++i) {
    const double x = lo + (hi - lo) * i / n;
    const double v = f(x);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const double bl = lo + (hi - lo) * std::max(0, best - 1) / n;
  const double bh = lo + (hi - lo) * std::min(n, best + 1) / n;
  const double scanned = golden_min(f, bl, bh);

  return f(scanned) < f(direct) ? scanned : direct;
}

// Zero of the signed modulus argument of the tangle closed form; the kink
// of |f| sits exactly there.
double tangle_kink_bisect() {
  double lo = kEdge, hi = 1.0 - kEdge;
  double flo = tangle_signed_argument(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = tangle_signed_argument(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct PiRoofConstants {
  double q0;
  double q1;
  double e0;  // measure at (q0, 0)
  double e1;  // measure at (q1, 0)
};

const PiRoofConstants& pi_roof_constants() {
  static const PiRoofConstants c = [] {
    const CriticalPoints& cp = critical_points_cached(MeasureKind::Pi);
    return PiRoofConstants{cp.q_star0, cp.q_star1,
                           pi_pure(make_ray(cp.q_star0, 0.0)),
                           pi_pure(make_ray(cp.q_star1, 0.0))};
  }();
  return c;
}

}  // namespace

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::Opt3: return "opt3";
    case Branch::Opt40: return "opt40";
    case Branch::Opt41: return "opt41";
  }
  return "?";
}

double e_opt3(MeasureKind kind, double p) {
  return measure_pure(kind, make_ray(checked_p(p), 0.0));
}

double e_opt40(MeasureKind kind, double p, double q) {
  if (!(q > 0.0 && q < 1.0))
    throw std::invalid_argument("e_opt40: q outside (0,1)");
  const double pc = checked_p(p);
  if (pc > q + 1e-12) throw std::domain_error("e_opt40: requires p <= q");
  return b40_raw(kind, std::min(pc, q), q);
}

double e_opt41(MeasureKind kind, double p, double q) {
  if (!(q > 0.0 && q < 1.0))
    throw std::invalid_argument("e_opt41: q outside (0,1)");
  const double pc = checked_p(p);
  if (pc < q - 1e-12) throw std::domain_error("e_opt41: requires p >= q");
  return b41_raw(kind, std::max(pc, q), q);
}

double branch_derivative_analytic(MeasureKind kind, double p, double q,
                                  int which) {
  const double pc = checked_p(p);
  if (!(q > 0.0 && q < 1.0))
    throw std::invalid_argument("branch derivative: q outside (0,1)");
  const double e = measure_pure(kind, make_ray(q, 0.0));
  const double de = measure_pure_dq(kind, q);
  if (which == 40) {
    const double ew = w_state_value(kind);
    return pc * (ew / (q * q) - e / (q * q) + de / q);
  }
  if (which == 41) {
    const double r = 1.0 - q;
    return (1.0 - pc) * (-1.0 / (r * r) + e / (r * r) + de / r);
  }
  throw std::invalid_argument("branch derivative: which must be 40 or 41");
}

double branch_derivative_fd(MeasureKind kind, double p, double q, int which,
                            double h) {
  const double pc = checked_p(p);
  if (!(h > 0.0)) throw std::invalid_argument("branch derivative: h <= 0");
  if (!(q - h > 0.0 && q + h < 1.0))
    throw std::domain_error("branch derivative: q +/- h leaves (0,1)");
  if (which == 40) {
    if (pc > q - h) throw std::domain_error("branch derivative: needs p <= q-h");
    return (b40_raw(kind, pc, q + h) - b40_raw(kind, pc, q - h)) / (2.0 * h);
  }
  if (which == 41) {
    if (pc < q + h) throw std::domain_error("branch derivative: needs p >= q+h");
    return (b41_raw(kind, pc, q + h) - b41_raw(kind, pc, q - h)) / (2.0 * h);
  }
  throw std::invalid_argument("branch derivative: which must be 40 or 41");
}

CriticalPoints find_critical_points_at(MeasureKind kind, double p_ref) {
  if (!(p_ref > 1e-6 && p_ref < 1.0 - 1e-6))
    throw std::invalid_argument("find_critical_points: p_ref too extreme");

  const auto f40 = [&](double q) { return b40_raw(kind, p_ref, q); };
  const auto f41 = [&](double q) { return b41_raw(kind, p_ref, q); };

  double q0 = minimize_1d(f40, kEdge, 1.0 - kEdge);
  double q1 = minimize_1d(f41, kEdge, 1.0 - kEdge);

  if (kind == MeasureKind::Tangle) {
    // The first branch bottoms out where the modulus argument changes sign;
    // golden section cannot resolve a kink to machine precision, bisection
    // can.
    const double kink = tangle_kink_bisect();
    if (f40(kink) <= f40(q0)) q0 = kink;
    if (f41(kink) <= f41(q1)) q1 = kink;
  }

  if (!(q0 > 0.0 && q0 <= q1 && q1 < 1.0))
    throw NumericalError("find_critical_points: implausible minimizers");
  return CriticalPoints{q0, q1, 0.0, kind};
}

CriticalPoints find_critical_points(MeasureKind kind) {
  return find_critical_points_at(kind, 0.5);
}

const CriticalPoints& critical_points_cached(MeasureKind kind) {
  static const CriticalPoints tangle = find_critical_points(MeasureKind::Tangle);
  static const CriticalPoints pi = find_critical_points(MeasureKind::Pi);
  return kind == MeasureKind::Tangle ? tangle : pi;
}

double tangle_q_star0_analytic() {
  const double c = 4.0 * std::cbrt(2.0);
  return c / (3.0 + c);
}

double tangle_q_star1_analytic() {
  return 0.5 + 3.0 * std::sqrt(465.0) / 310.0;
}

RoofBranches roof_branches(MeasureKind kind, double p) {
  const double pc = checked_p(p);
  const CriticalPoints& cp = critical_points_cached(kind);
  RoofBranches rb{};
  rb.opt3 = e_opt3(kind, pc);
  rb.has_opt40 = pc <= cp.q_star0;
  if (rb.has_opt40) rb.opt40 = b40_raw(kind, pc, cp.q_star0);
  rb.has_opt41 = pc >= cp.q_star1;
  if (rb.has_opt41) rb.opt41 = b41_raw(kind, pc, cp.q_star1);
  return rb;
}

RoofResult roof_eval(MeasureKind kind, double p) {
  const RoofBranches rb = roof_branches(kind, p);
  double v = rb.opt3;
  if (rb.has_opt40) v = std::min(v, rb.opt40);
  if (rb.has_opt41) v = std::min(v, rb.opt41);
  // Vertex branches take the label on ties: at a joint the four-state
  // construction is the one the optimizer actually exhibits.
  Branch b = Branch::Opt3;
  if (rb.has_opt41 && rb.opt41 <= v + 1e-12) b = Branch::Opt41;
  if (rb.has_opt40 && rb.opt40 <= v + 1e-12) b = Branch::Opt40;
  return RoofResult{clamp01(v), b};
}

double roof_value(MeasureKind kind, double p) { return roof_eval(kind, p).value; }

double tangle_mixed_closed(double p) {
  const double pc = checked_p(p);
  const double q0 = tangle_q_star0_analytic();
  const double q1 = tangle_q_star1_analytic();
  double v;
  if (pc <= q0) {
    // -(q0^2) + (8/9) sqrt(6 q0 (1-q0)^3) is zero at the analytic point up
    // to rounding; the clamp below removes the residual sign noise.
    v = (pc / q0) * (-tangle_signed_argument(q0));
  } else if (pc < q1) {
    v = tangle_closed(make_ray(pc, 0.0));
  } else {
    v = (pc - q1) / (1.0 - q1) +
        ((1.0 - pc) / (1.0 - q1)) * tangle_closed(make_ray(q1, 0.0));
  }
  if (v < -1e-8) throw NumericalError("tangle_mixed_closed: negative branch value");
  return clamp01(v);
}

double pi_mixed_closed(double p) {
  const double pc = checked_p(p);
  const PiRoofConstants& c = pi_roof_constants();
  double v;
  if (pc <= c.q0) {
    v = ((c.q0 - pc) / c.q0) * w_state_value(MeasureKind::Pi) +
        (pc / c.q0) * c.e0;
  } else if (pc < c.q1) {
    v = pi_pure(make_ray(pc, 0.0));
  } else {
    v = (pc - c.q1) / (1.0 - c.q1) + ((1.0 - pc) / (1.0 - c.q1)) * c.e1;
  }
  return clamp01(v);
}

double mixed_closed(MeasureKind kind, double p) {
  return kind == MeasureKind::Tangle ? tangle_mixed_closed(p)
                                     : pi_mixed_closed(p);
}

WeightedEnsemble build_decomposition(MeasureKind kind, double p) {
  const double pc = checked_p(p);
  const CriticalPoints& cp = critical_points_cached(kind);
  WeightedEnsemble e;
  const auto add_triple = [&e](double weight_each, double q) {
    for (int n = 0; n < 3; ++n)
      e.entries.push_back({weight_each, make_ray(q, kTwoPi * n / 3.0)});
  };
  if (pc <= cp.q_star0) {
    e.entries.push_back({(cp.q_star0 - pc) / cp.q_star0, make_ray(0.0, 0.0)});
    add_triple(pc / (3.0 * cp.q_star0), cp.q_star0);
  } else if (pc >= cp.q_star1) {
    e.entries.push_back(
        {(pc - cp.q_star1) / (1.0 - cp.q_star1), make_ray(1.0, 0.0)});
    add_triple((1.0 - pc) / (3.0 * (1.0 - cp.q_star1)), cp.q_star1);
  } else {
    add_triple(1.0 / 3.0, pc);
  }
  validate_ensemble(e);
  return e;
}

DecompositionCheck verify_decomposition(const WeightedEnsemble& e, double p,
                                        MeasureKind kind) {
  validate_ensemble(e);
  const double pc = checked_p(p);
  const double residual =
      ensemble_density(e).max_abs_diff(mixture_density(pc));

  // Equal-share condition across the phase-triple entries; the vertex
  // entries (q at 0 or 1) carry their own weights and stay out of it.
  double lo = 0.0, hi = 0.0;
  bool any = false;
  for (const EnsembleEntry& en : e.entries) {
    if (en.ray.q <= kEdge || en.ray.q >= 1.0 - kEdge) continue;
    const double we = en.weight * measure_pure(kind, en.ray);
    if (!any) {
      lo = hi = we;
      any = true;
    } else {
      lo = std::min(lo, we);
      hi = std::max(hi, we);
    }
  }
  return DecompositionCheck{residual, any ? hi - lo : 0.0};
}

}  // namespace ghzw
