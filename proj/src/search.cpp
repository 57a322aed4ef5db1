/**
 * Copyright 2026, the qsearchlab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qsl/search.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "qsl/analytic.hpp"

namespace qsl {

namespace {

void validate_params(const SearchParams& params) {
  if (!(params.lambda > 1.0) || !(params.lambda < 4.0 / 3.0)) {
    throw std::invalid_argument("SearchParams: lambda must lie in (1, 4/3)");
  }
  if (params.max_m && !(*params.max_m >= 1.0)) {
    throw std::invalid_argument("SearchParams: max_m must be >= 1");
  }
}

}  // namespace

SearchOutcome run_exponential_schedule(const ScheduleHooks& hooks, const SearchParams& params,
                                       Rng& rng) {
  validate_params(params);
  if (hooks.domain_size == 0) {
    throw std::invalid_argument("run_exponential_schedule: domain size must be nonzero");
  }
  SearchOutcome outcome;

  if (hooks.success_fraction > 0.5) {
    // Solutions are the majority; sampling the prepared state classically
    // finds one in two expected probes. Fall through to the quantum loop
    // if four probes all miss.
    for (int probe = 0; probe < 4; ++probe) {
      StateVector state = hooks.prepare();
      const uint64_t x = measure(state, rng);
      outcome.classical_evals += 1;
      const bool hit = hooks.accept(x);
      outcome.loops.push_back({0.0, 0, x, hit});
      if (hit) {
        outcome.found = x;
        return outcome;
      }
    }
  }

  const double cap =
      params.max_m ? *params.max_m : std::sqrt(static_cast<double>(hooks.domain_size));
  for (double m = 1.0; m <= cap; m *= params.lambda) {
    const auto draw_bound = static_cast<uint64_t>(std::ceil(m));
    const uint64_t k = rng.uniform_below(draw_bound);
    StateVector state = hooks.prepare();
    for (uint64_t i = 0; i < k; ++i) hooks.iterate(state);
    const uint64_t x = measure(state, rng);
    outcome.total_queries += k;
    outcome.classical_evals += 1;
    const bool hit = hooks.accept(x);
    outcome.loops.push_back({m, k, x, hit});
    if (hit) {
      outcome.found = x;
      return outcome;
    }
  }
  return outcome;  // schedule exhausted: not found
}

SearchOutcome search_known(const OracleSpec& oracle, uint64_t marked_count, Rng& rng) {
  if (marked_count == 0) throw std::domain_error("search_known: no solutions (a = 0)");
  if (marked_count > oracle.domain_size()) {
    throw std::invalid_argument("search_known: marked count exceeds domain");
  }
  const RotationModel model = make_model(oracle.num_qubits(), marked_count);
  const uint64_t k = optimal_k(model);

  StateVector state = uniform_state(oracle.num_qubits());
  for (uint64_t i = 0; i < k; ++i) apply_grover_iteration(state, oracle);
  const uint64_t x = measure(state, rng);
  const bool hit = oracle.contains(x);

  SearchOutcome outcome;
  outcome.total_queries = k;
  outcome.classical_evals = 1;
  outcome.loops.push_back({0.0, k, x, hit});
  if (hit) outcome.found = x;
  return outcome;
}

SearchOutcome search_unknown(const OracleSpec& oracle, const SearchParams& params, Rng& rng) {
  ScheduleHooks hooks;
  hooks.prepare = [&oracle]() { return uniform_state(oracle.num_qubits()); };
  hooks.iterate = [&oracle](StateVector& s) { apply_grover_iteration(s, oracle); };
  hooks.accept = [&oracle](uint64_t x) { return oracle.contains(x); };
  hooks.success_fraction =
      static_cast<double>(oracle.marked_count()) / static_cast<double>(oracle.domain_size());
  hooks.domain_size = oracle.domain_size();
  return run_exponential_schedule(hooks, params, rng);
}

SearchOutcome classical_baseline(const OracleSpec& oracle, Rng& rng) {
  const uint64_t domain = oracle.domain_size();
  // Sparse Fisher-Yates: probes are uniform without replacement, memory is
  // proportional to the number of probes actually made.
  std::unordered_map<uint64_t, uint64_t> swapped;
  auto slot = [&swapped](uint64_t i) {
    auto it = swapped.find(i);
    return it == swapped.end() ? i : it->second;
  };

  SearchOutcome outcome;
  for (uint64_t i = 0; i < domain; ++i) {
    const uint64_t j = i + rng.uniform_below(domain - i);
    const uint64_t value = slot(j);
    swapped[j] = slot(i);
    outcome.total_queries += 1;
    outcome.classical_evals += 1;
    const bool hit = oracle.contains(value);
    outcome.loops.push_back({0.0, 0, value, hit});
    if (hit) {
      outcome.found = value;
      return outcome;
    }
  }
  return outcome;
}

std::map<uint64_t, double> solution_distribution(const OracleSpec& oracle, uint64_t iterations) {
  if (oracle.marked_count() == 0) {
    throw std::invalid_argument("solution_distribution: oracle has no marked items");
  }
  StateVector state = uniform_state(oracle.num_qubits());
  for (uint64_t i = 0; i < iterations; ++i) {
    apply_phase_flip(state, oracle.marked(), oracle.num_qubits());
    apply_diffusion(state, oracle.num_qubits());
  }
  std::map<uint64_t, double> distribution;
  for (uint64_t x : oracle.marked()) distribution[x] = std::norm(state[x]);
  return distribution;
}

}  // namespace qsl
