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

#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

namespace ghzw {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Standard normals from raw mt19937_64 bits via Box-Muller; avoids the
// implementation-defined std::normal_distribution so identical seeds give
// identical streams everywhere.
class Gaussian {
 public:
  explicit Gaussian(uint64_t seed) : rng_(seed) {}

  double operator()() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return r * std::cos(kTwoPi * u2);
  }

 private:
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

struct DecodedState {
  double w;
  double q;
  double theta;
};

// Maps 4n raw reals to an n x 2 complex matrix with orthonormal columns
// (Gram-Schmidt), then to the weighted family members of the induced
// decomposition. Near-degenerate raw vectors get a smooth penalty instead.
class EnsembleObjective {
 public:
  EnsembleObjective(MeasureKind kind, double p, int n)
      : kind_(kind), sp_(std::sqrt(p)), sw_(std::sqrt(1.0 - p)), n_(n) {}

  int dim() const { return 4 * n_; }

  bool decode(const std::vector<double>& x, std::vector<DecodedState>& out,
              double& penalty) const {
    std::vector<cplx> v1(n_), v2(n_);
    for (int i = 0; i < n_; ++i) {
      v1[i] = cplx(x[i], x[n_ + i]);
      v2[i] = cplx(x[2 * n_ + i], x[3 * n_ + i]);
    }
    double n1 = 0.0;
    for (const cplx& a : v1) n1 += std::norm(a);
    n1 = std::sqrt(n1);
    if (n1 < kDegenerate) {
      penalty = 1e3 + (kDegenerate - n1) * 1e3;
      return false;
    }
    for (cplx& a : v1) a /= n1;

    double nv2 = 0.0;
    for (const cplx& a : v2) nv2 += std::norm(a);
    nv2 = std::sqrt(nv2);
    const double floor2 = kDegenerate * std::max(1.0, nv2);

    // Orthogonalize twice: one pass loses orthogonality when v2 is nearly
    // parallel to v1, and the exact-reconstruction identity needs e1 ⟂ e2
    // to machine precision. The degeneracy floor is relative to |v2| for
    // the same reason.
    double n2 = 0.0;
    for (int pass = 0; pass < 2; ++pass) {
      cplx proj = 0.0;
      for (int i = 0; i < n_; ++i) proj += std::conj(v1[i]) * v2[i];
      n2 = 0.0;
      for (int i = 0; i < n_; ++i) {
        v2[i] -= proj * v1[i];
        n2 += std::norm(v2[i]);
      }
      n2 = std::sqrt(n2);
      if (n2 < floor2) {
        penalty = 1e3 + (floor2 - n2) * 1e3;
        return false;
      }
    }

    out.clear();
    for (int i = 0; i < n_; ++i) {
      const cplx alpha = v1[i] * sp_;            // GHZ coefficient
      const cplx beta = v2[i] / n2 * sw_;        // W coefficient
      const double w = std::norm(alpha) + std::norm(beta);
      if (w < 1e-14) continue;
      const double q = std::norm(alpha) / w;
      // Snapping tiny q to an exact endpoint would zero a sqrt(q)-sized
      // amplitude and break the cross-term cancellation behind exact
      // reconstruction, so keep q as computed. An exactly zero cross
      // product means the phase is immaterial (and arg(-0) would give pi).
      const cplx cross = -beta * std::conj(alpha);
      const double theta = cross == cplx(0.0, 0.0) ? 0.0 : std::arg(cross);
      out.push_back({w, q, theta});
    }
    penalty = 0.0;
    return true;
  }

  double operator()(const std::vector<double>& x) const {
    std::vector<DecodedState> states;
    double penalty;
    if (!decode(x, states, penalty)) return penalty;
    double total = 0.0;
    for (const DecodedState& s : states)
      total += s.w * measure_pure(kind_, make_ray(s.q, s.theta));
    return total;
  }

 private:
  static constexpr double kDegenerate = 1e-7;

  MeasureKind kind_;
  double sp_;
  double sw_;
  int n_;
};

struct NmResult {
  std::vector<double> x;
  double f;
  bool converged;
};

template <typename F>
NmResult nelder_mead(const F& f, const std::vector<double>& x0, double step,
                     int max_iter, double ftol) {
  const int d = static_cast<int>(x0.size());
  std::vector<std::vector<double>> pts(d + 1, x0);
  std::vector<double> fv(d + 1);
  for (int i = 1; i <= d; ++i) pts[i][i - 1] += step;
  for (int i = 0; i <= d; ++i) fv[i] = f(pts[i]);

  std::vector<int> order(d + 1);
  const auto resort = [&] {
    for (int i = 0; i <= d; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return fv[a] < fv[b]; });
  };

  bool converged = false;
  for (int iter = 0; iter < max_iter; ++iter) {
    resort();
    if (fv[order[d]] - fv[order[0]] < ftol) {
      converged = true;
      break;
    }
    const int worst = order[d];
    std::vector<double> centroid(d, 0.0);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) centroid[k] += pts[order[i]][k] / d;

    std::vector<double> xr(d);
    for (int k = 0; k < d; ++k)
      xr[k] = centroid[k] + (centroid[k] - pts[worst][k]);
    const double fr = f(xr);

    if (fr < fv[order[0]]) {
      std::vector<double> xe(d);
      for (int k = 0; k < d; ++k) xe[k] = centroid[k] + 2.0 * (xr[k] - centroid[k]);
      const double fe = f(xe);
      if (fe < fr) {
        pts[worst] = std::move(xe);
        fv[worst] = fe;
      } else {
        pts[worst] = std::move(xr);
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[order[d - 1]]) {
      pts[worst] = std::move(xr);
      fv[worst] = fr;
      continue;
    }

    std::vector<double> xc(d);
    if (fr < fv[worst]) {
      for (int k = 0; k < d; ++k) xc[k] = centroid[k] + 0.5 * (xr[k] - centroid[k]);
      const double fc = f(xc);
      if (fc <= fr) {
        pts[worst] = std::move(xc);
        fv[worst] = fc;
        continue;
      }
    } else {
      for (int k = 0; k < d; ++k)
        xc[k] = centroid[k] + 0.5 * (pts[worst][k] - centroid[k]);
      const double fc = f(xc);
      if (fc < fv[worst]) {
        pts[worst] = std::move(xc);
        fv[worst] = fc;
        continue;
      }
    }

    const int bi = order[0];
    for (int i = 0; i <= d; ++i) {
      if (i == bi) continue;
      for (int k = 0; k < d; ++k)
        pts[i][k] = pts[bi][k] + 0.5 * (pts[i][k] - pts[bi][k]);
      fv[i] = f(pts[i]);
    }
  }

  resort();
  return NmResult{pts[order[0]], fv[order[0]], converged};
}

}  // namespace

SearchResult oracle_search(MeasureKind kind, double p, int n_states,
                           int restarts, std::uint64_t seed) {
  if (!std::isfinite(p) || p < -1e-12 || p > 1.0 + 1e-12)
    throw std::invalid_argument("oracle_search: p outside [0,1]");
  if (n_states < 2 || n_states > 4)
    throw std::invalid_argument("oracle_search: n_states must be 2..4");
  if (restarts < 1)
    throw std::invalid_argument("oracle_search: restarts must be positive");
  const double pc = clamp01(p);

  const EnsembleObjective objective(kind, pc, n_states);
  const int d = objective.dim();
  const int max_iter = 250 * d;

  NmResult best{};
  best.f = std::numeric_limits<double>::infinity();
  int used = 0;
  for (int k = 0; k < restarts; ++k) {
    Gaussian gauss(splitmix64(seed + static_cast<uint64_t>(k)));
    std::vector<double> x0(d);
    for (double& v : x0) v = gauss();

    NmResult r = nelder_mead(objective, x0, 0.4, max_iter, 1e-13);
    r = nelder_mead(objective, r.x, 0.05, max_iter, 1e-13);
    r = nelder_mead(objective, r.x, 0.005, max_iter, 1e-14);

    used = k + 1;
    if (r.f < best.f) best = std::move(r);
    // The objective is a weighted average of nonnegative functionals, so
    // nothing can improve on (numerical) zero.
    if (best.f < 1e-12) break;
  }

  std::vector<DecodedState> states;
  double penalty;
  if (!objective.decode(best.x, states, penalty))
    throw NumericalError("oracle_search: best candidate is degenerate");

  // Entries whose rays coincide describe the same projector; merge them so
  // pure endpoints report the single-state decomposition they are.
  WeightedEnsemble ens;
  for (const DecodedState& s : states) {
    if (s.w <= 1e-12) continue;
    const Ray ray = make_ray(s.q, s.theta);
    bool merged = false;
    for (EnsembleEntry& en : ens.entries) {
      const double dth = std::remainder(en.ray.theta - ray.theta, kTwoPi);
      if (std::abs(en.ray.q - ray.q) < 1e-9 &&
          (std::abs(dth) < 1e-9 || std::min(ray.q, en.ray.q) > 1.0 - 1e-9 ||
           std::max(ray.q, en.ray.q) < 1e-9)) {
        en.weight += s.w;
        merged = true;
        break;
      }
    }
    if (!merged) ens.entries.push_back({s.w, ray});
  }

  const double residual =
      ensemble_density(ens).max_abs_diff(mixture_density(pc));
  if (residual > 1e-8)
    throw NumericalError("oracle_search: reconstruction residual above 1e-8");

  return SearchResult{best.f, std::move(ens), used, best.converged};
}

}  // namespace ghzw
