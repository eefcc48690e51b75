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

#include "states.hpp"

#include <cmath>

namespace ghzw {

namespace {

constexpr double kRangeTol = 1e-12;

double checked_unit_interval(double v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " not finite");
  if (v < -kRangeTol || v > 1.0 + kRangeTol)
    throw std::invalid_argument(std::string(what) + " outside [0,1]");
  return clamp01(v);
}

// Bit position (from the least significant end) of each subsystem in the
// basis index 4a + 2b + c.
constexpr int kBitA = 2;
constexpr int kBitB = 1;
constexpr int kBitC = 0;

}  // namespace

Ray make_ray(double q, double theta) {
  Ray r;
  r.q = checked_unit_interval(q, "q");
  if (!std::isfinite(theta)) throw std::invalid_argument("theta not finite");
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  r.theta = t;
  return r;
}

PureState make_ghz() {
  PureState s{};
  const double a = 1.0 / std::sqrt(2.0);
  s[0] = a;
  s[7] = a;
  return s;
}

PureState make_w() {
  PureState s{};
  const double a = 1.0 / std::sqrt(3.0);
  s[1] = a;
  s[2] = a;
  s[4] = a;
  return s;
}

PureState superpose(const Ray& ray) {
  PureState s{};
  const double g = std::sqrt(ray.q / 2.0);
  const cplx w = -std::sqrt((1.0 - ray.q) / 3.0) *
                 cplx(std::cos(ray.theta), std::sin(ray.theta));
  s[0] = g;
  s[7] = g;
  s[1] = w;
  s[2] = w;
  s[4] = w;
  return s;
}

double norm(const PureState& psi) {
  double s = 0.0;
  for (const cplx& a : psi) s += std::norm(a);
  return std::sqrt(s);
}

cplx overlap(const PureState& a, const PureState& b) {
  cplx s = 0.0;
  for (int i = 0; i < 8; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

CMatrix density(const PureState& psi) {
  if (std::abs(norm(psi) - 1.0) > 1e-12)
    throw std::invalid_argument("density: state not unit norm");
  CMatrix rho(8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) rho(i, j) = psi[i] * std::conj(psi[j]);
  return rho;
}

CMatrix mixture_density(double p) {
  const double pc = checked_unit_interval(p, "p");
  CMatrix rho = density(make_ghz());
  rho *= pc;
  CMatrix w = density(make_w());
  w *= (1.0 - pc);
  rho += w;
  return rho;
}

CMatrix partial_trace(const CMatrix& rho, Subsystems keep) {
  if (rho.dim() != 8)
    throw std::invalid_argument("partial_trace: input must be 8x8");

  // Kept bit positions, most significant subsystem first.
  int kept[2];
  int nkept = 0;
  switch (keep) {
    case Subsystems::A: kept[0] = kBitA; nkept = 1; break;
    case Subsystems::B: kept[0] = kBitB; nkept = 1; break;
    case Subsystems::C: kept[0] = kBitC; nkept = 1; break;
    case Subsystems::AB: kept[0] = kBitA; kept[1] = kBitB; nkept = 2; break;
    case Subsystems::BC: kept[0] = kBitB; kept[1] = kBitC; nkept = 2; break;
    case Subsystems::AC: kept[0] = kBitA; kept[1] = kBitC; nkept = 2; break;
    default: throw std::invalid_argument("partial_trace: invalid keep set");
  }
  int traced[3];
  int ntraced = 0;
  for (int bit = kBitA; bit >= 0; --bit) {
    bool is_kept = false;
    for (int k = 0; k < nkept; ++k)
      if (kept[k] == bit) is_kept = true;
    if (!is_kept) traced[ntraced++] = bit;
  }

  const int dout = 1 << nkept;
  CMatrix out(dout);
  for (int m = 0; m < dout; ++m) {
    for (int n = 0; n < dout; ++n) {
      cplx s = 0.0;
      for (int t = 0; t < (1 << ntraced); ++t) {
        int row = 0, col = 0;
        for (int k = 0; k < nkept; ++k) {
          row |= ((m >> (nkept - 1 - k)) & 1) << kept[k];
          col |= ((n >> (nkept - 1 - k)) & 1) << kept[k];
        }
        for (int k = 0; k < ntraced; ++k) {
          const int bit = ((t >> k) & 1) << traced[k];
          row |= bit;
          col |= bit;
        }
        s += rho(row, col);
      }
      out(m, n) = s;
    }
  }
  return out;
}

CMatrix partial_transpose_first(const CMatrix& rho_pair) {
  if (rho_pair.dim() != 4)
    throw std::invalid_argument("partial_transpose_first: input must be 4x4");
  CMatrix out(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out(2 * i + j, 2 * k + l) = rho_pair(2 * k + j, 2 * i + l);
  return out;
}

void validate_ensemble(const WeightedEnsemble& e) {
  if (e.entries.empty() || e.entries.size() > 4)
    throw std::invalid_argument("ensemble: needs 1 to 4 entries");
  double total = 0.0;
  for (const EnsembleEntry& en : e.entries) {
    if (!std::isfinite(en.weight) || en.weight < -kRangeTol)
      throw std::invalid_argument("ensemble: negative weight");
    total += en.weight;
  }
  if (std::abs(total - 1.0) > 1e-10)
    throw std::invalid_argument("ensemble: weights do not sum to 1");
}

CMatrix ensemble_density(const WeightedEnsemble& e) {
  validate_ensemble(e);
  CMatrix rho(8);
  for (const EnsembleEntry& en : e.entries) {
    CMatrix d = density(superpose(en.ray));
    d *= std::max(en.weight, 0.0);
    rho += d;
  }
  return rho;
}

}  // namespace ghzw
