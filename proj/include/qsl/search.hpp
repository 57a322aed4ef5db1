/**
 * Copyright 2026, the qsearchlab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "qsl/rng.hpp"
#include "qsl/state_vector.hpp"

namespace qsl {

/// Parameters of the exponential schedule used when the number of solutions
/// is unknown. Any growth factor in (1, 4/3) keeps the expected cost within
/// a constant of the critical point; 6/5 is the conventional choice.
struct SearchParams {
  double lambda = 6.0 / 5.0;
  std::optional<double> max_m;  // schedule cap; defaults to sqrt(N)
};

/// One schedule loop: the (real-valued) schedule position, the drawn
/// iteration count, the measured index and whether it was a solution.
/// Classical probes are recorded with m_value = 0 and k_drawn = 0.
struct LoopRecord {
  double m_value = 0.0;
  uint64_t k_drawn = 0;
  uint64_t measured = 0;
  bool hit = false;
};

/// Result of one search run. total_queries counts Grover iterations for the
/// quantum procedures and classical evaluations for the classical baseline;
/// classical_evals counts membership checks in every mode.
struct SearchOutcome {
  std::optional<uint64_t> found;
  uint64_t total_queries = 0;
  uint64_t classical_evals = 0;
  std::vector<LoopRecord> loops;
};

/// Hooks for the generic exponential schedule. The same engine drives the
/// oracle search and generic amplitude amplification, so the two reductions
/// agree run-for-run under a shared seed.
struct ScheduleHooks {
  std::function<StateVector()> prepare;
  std::function<void(StateVector&)> iterate;
  std::function<bool(uint64_t)> accept;
  double success_fraction = 0.0;  // known good fraction; > 1/2 probes classically first
  uint64_t domain_size = 0;
};

/// Schedule loop: m starts at 1 and grows geometrically while m <= cap; each
/// loop draws k uniformly from {0, ..., ceil(m)-1}, iterates k times on a
/// fresh prepared state, measures once and checks the result classically.
/// When success_fraction > 1/2, up to four classical probes run first.
SearchOutcome run_exponential_schedule(const ScheduleHooks& hooks, const SearchParams& params,
                                       Rng& rng);

/// Search with the number of solutions known: prepares the uniform state,
/// applies the optimal number of Grover iterations, measures once. The
/// caller-asserted count a is trusted, as a mismatch cannot be detected
/// from a single run. Throws std::domain_error for a = 0.
SearchOutcome search_known(const OracleSpec& oracle, uint64_t marked_count, Rng& rng);

/// Search with the number of solutions unknown (exponential schedule).
/// Not-found is a valid outcome once the schedule cap is exhausted and
/// signals an empty oracle with high confidence.
SearchOutcome search_unknown(const OracleSpec& oracle, const SearchParams& params, Rng& rng);

/// Uniform random probing without replacement; expected (N+1)/(a+1)
/// evaluations to the first hit.
SearchOutcome classical_baseline(const OracleSpec& oracle, Rng& rng);

/// Exact per-marked-index measurement probability after k iterations,
/// computed from the state vector (query counters untouched). All marked
/// indices carry equal probability.
std::map<uint64_t, double> solution_distribution(const OracleSpec& oracle, uint64_t iterations);

}  // namespace qsl
