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

#include "ghzw.h"

#include <memory>
#include <new>

#include "checks.hpp"
#include "oracle.hpp"
#include "roof.hpp"

struct ghzw_ensemble {
  ghzw::WeightedEnsemble impl;
};

struct ghzw_search {
  ghzw::SearchResult impl;
  ghzw_ensemble view;  // borrowed wrapper over impl.ensemble
};

struct ghzw_report {
  std::vector<ghzw::CheckGroupResult> groups;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
ghzw_status wrap(F&& body) {
  try {
    body();
    return GHZW_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return GHZW_ERR_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return GHZW_ERR_ARGUMENT;
  } catch (const ghzw::NumericalError& e) {
    g_last_error = e.what();
    return GHZW_ERR_NUMERICAL;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return GHZW_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GHZW_ERR_INTERNAL;
  }
}

ghzw_status arg_error(const char* msg) {
  g_last_error = msg;
  return GHZW_ERR_ARGUMENT;
}

ghzw::MeasureKind to_kind(ghzw_measure m) {
  if (m == GHZW_MEASURE_TANGLE) return ghzw::MeasureKind::Tangle;
  if (m == GHZW_MEASURE_PI) return ghzw::MeasureKind::Pi;
  throw std::invalid_argument("unknown measure tag");
}

int branch_code(ghzw::Branch b) {
  switch (b) {
    case ghzw::Branch::Opt3: return GHZW_BRANCH_OPT3;
    case ghzw::Branch::Opt40: return GHZW_BRANCH_OPT40;
    case ghzw::Branch::Opt41: return GHZW_BRANCH_OPT41;
  }
  return 0;
}

}  // namespace

extern "C" {

const char* ghzw_version(void) { return "1.0.0"; }

const char* ghzw_last_error(void) { return g_last_error.c_str(); }

ghzw_status ghzw_tangle_pure(double q, double theta, double* out) {
  if (!out) return arg_error("out is NULL");
  return wrap([&] { *out = ghzw::tangle_closed(ghzw::make_ray(q, theta)); });
}

ghzw_status ghzw_pi_pure(double q, double theta, double* out) {
  if (!out) return arg_error("out is NULL");
  return wrap([&] { *out = ghzw::pi_pure(ghzw::make_ray(q, theta)); });
}

ghzw_status ghzw_measure_pure(ghzw_measure measure, double q, double theta,
                              double* out) {
  if (!out) return arg_error("out is NULL");
  return wrap([&] {
    *out = ghzw::measure_pure(to_kind(measure), ghzw::make_ray(q, theta));
  });
}

ghzw_status ghzw_concurrence(double q, double theta, double* out) {
  if (!out) return arg_error("out is NULL");
  return wrap([&] { *out = ghzw::concurrence_a_bc(ghzw::make_ray(q, theta)); });
}

ghzw_status ghzw_negativity(double q, double theta, double* out) {
  if (!out) return arg_error("out is NULL");
  return wrap([&] { *out = ghzw::negativity_ab(ghzw::make_ray(q, theta)); });
}

ghzw_status ghzw_mixed_value(ghzw_measure measure, double p, double* value,
                             int* branch) {
  if (!value && !branch) return arg_error("both out-pointers are NULL");
  return wrap([&] {
    const ghzw::MeasureKind kind = to_kind(measure);
    const ghzw::RoofResult r = ghzw::roof_eval(kind, p);
    // The piecewise closed form is the contract; roof_eval supplies the
    // branch label and agrees with it within 1e-9.
    if (value) *value = ghzw::mixed_closed(kind, p);
    if (branch) *branch = branch_code(r.branch);
  });
}

ghzw_status ghzw_critical_points(ghzw_measure measure, double* q_star0,
                                 double* q_star1, double* theta_star) {
  return wrap([&] {
    const ghzw::CriticalPoints& cp =
        ghzw::critical_points_cached(to_kind(measure));
    if (q_star0) *q_star0 = cp.q_star0;
    if (q_star1) *q_star1 = cp.q_star1;
    if (theta_star) *theta_star = cp.theta_star;
  });
}

ghzw_status ghzw_tangle_critical_analytic(double* q_star0, double* q_star1) {
  return wrap([&] {
    if (q_star0) *q_star0 = ghzw::tangle_q_star0_analytic();
    if (q_star1) *q_star1 = ghzw::tangle_q_star1_analytic();
  });
}

ghzw_status ghzw_build_decomposition(ghzw_measure measure, double p,
                                     ghzw_ensemble** out) {
  if (!out) return arg_error("out is NULL");
  return wrap([&] {
    auto e = std::make_unique<ghzw_ensemble>();
    e->impl = ghzw::build_decomposition(to_kind(measure), p);
    *out = e.release();
  });
}

ghzw_status ghzw_ensemble_new(const double* weights, const double* qs,
                              const double* thetas, size_t n,
                              ghzw_ensemble** out) {
  if (!out) return arg_error("out is NULL");
  if (!weights || !qs || !thetas) return arg_error("input array is NULL");
  return wrap([&] {
    ghzw::WeightedEnsemble ens;
    for (size_t i = 0; i < n; ++i)
      ens.entries.push_back({weights[i], ghzw::make_ray(qs[i], thetas[i])});
    ghzw::validate_ensemble(ens);
    auto e = std::make_unique<ghzw_ensemble>();
    e->impl = std::move(ens);
    *out = e.release();
  });
}

size_t ghzw_ensemble_size(const ghzw_ensemble* e) {
  return e ? e->impl.entries.size() : 0;
}

ghzw_status ghzw_ensemble_entry(const ghzw_ensemble* e, size_t index,
                                double* weight, double* q, double* theta) {
  if (!e) return arg_error("ensemble is NULL");
  if (index >= e->impl.entries.size()) return arg_error("index out of range");
  const ghzw::EnsembleEntry& en = e->impl.entries[index];
  if (weight) *weight = en.weight;
  if (q) *q = en.ray.q;
  if (theta) *theta = en.ray.theta;
  return GHZW_OK;
}

ghzw_status ghzw_ensemble_check(const ghzw_ensemble* e, ghzw_measure measure,
                                double p, double* residual, double* spread) {
  if (!e) return arg_error("ensemble is NULL");
  return wrap([&] {
    const ghzw::DecompositionCheck ck =
        ghzw::verify_decomposition(e->impl, p, to_kind(measure));
    if (residual) *residual = ck.residual;
    if (spread) *spread = ck.spread;
  });
}

void ghzw_ensemble_free(ghzw_ensemble* e) { delete e; }

ghzw_status ghzw_oracle_search(ghzw_measure measure, double p, int n_states,
                               int restarts, uint64_t seed, ghzw_search** out) {
  if (!out) return arg_error("out is NULL");
  return wrap([&] {
    auto s = std::make_unique<ghzw_search>();
    s->impl = ghzw::oracle_search(to_kind(measure), p, n_states, restarts, seed);
    s->view.impl = s->impl.ensemble;
    *out = s.release();
  });
}

double ghzw_search_value(const ghzw_search* s) { return s ? s->impl.value : -1.0; }

int ghzw_search_restarts_used(const ghzw_search* s) {
  return s ? s->impl.restarts_used : 0;
}

int ghzw_search_converged(const ghzw_search* s) {
  return s && s->impl.converged ? 1 : 0;
}

const ghzw_ensemble* ghzw_search_ensemble(const ghzw_search* s) {
  return s ? &s->view : nullptr;
}

void ghzw_search_free(ghzw_search* s) { delete s; }

ghzw_status ghzw_verify_run(ghzw_report** out) {
  if (!out) return arg_error("out is NULL");
  return wrap([&] {
    auto r = std::make_unique<ghzw_report>();
    r->groups = ghzw::run_invariant_checks();
    *out = r.release();
  });
}

size_t ghzw_report_size(const ghzw_report* r) {
  return r ? r->groups.size() : 0;
}

ghzw_status ghzw_report_group(const ghzw_report* r, size_t index,
                              const char** name, int* passed,
                              const char** detail) {
  if (!r) return arg_error("report is NULL");
  if (index >= r->groups.size()) return arg_error("index out of range");
  const ghzw::CheckGroupResult& g = r->groups[index];
  if (name) *name = g.name.c_str();
  if (passed) *passed = g.passed ? 1 : 0;
  if (detail) *detail = g.detail.c_str();
  return GHZW_OK;
}

int ghzw_report_all_passed(const ghzw_report* r) {
  if (!r) return 0;
  for (const ghzw::CheckGroupResult& g : r->groups)
    if (!g.passed) return 0;
  return 1;
}

void ghzw_report_free(ghzw_report* r) { delete r; }

}  // extern "C"
