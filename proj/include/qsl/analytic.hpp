/**
 * Copyright 2026, the qsearchlab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#pragma once

#include <cstdint>

namespace qsl {

/// Closed-form description of the Grover rotation in the two-dimensional
/// plane spanned by the marked and unmarked superpositions. The whole
/// dynamics of the search is a rotation by 2*theta per iteration, where
/// sin^2(theta) = a/N. Everything in this module is oracle-free ground
/// truth that the state-vector simulation is checked against.
struct RotationModel {
  int num_qubits = 0;          // n
  uint64_t domain_size = 0;    // N = 2^n
  uint64_t marked_count = 0;   // a, 0 <= a <= N
  double theta = 0.0;          // asin(sqrt(a/N)), radians in [0, pi/2]

  uint64_t unmarked_count() const { return domain_size - marked_count; }
};

/// Builds a model for n qubits (1 <= n <= 30) and a marked items.
/// Throws std::invalid_argument when the parameters are out of range.
RotationModel make_model(int num_qubits, uint64_t marked_count);

/// Probability of measuring a marked item after k Grover iterations:
/// sin^2((2k+1)*theta). Returns 0 for a = 0 and 1 for a = N.
double success_prob(const RotationModel& model, uint64_t iterations);

/// Iteration count minimizing |pi/2 - (2k+1)*theta|, i.e. the count whose
/// success probability is guaranteed to be at least 1 - a/N.
/// Throws std::domain_error for a = 0 (no finite optimum exists).
uint64_t optimal_k(const RotationModel& model);

/// Same optimum for an arbitrary rotation half-angle in (0, pi/2].
uint64_t optimal_iterations(double theta);

/// Probability of success when the iteration count is drawn uniformly from
/// {0, ..., m-1}: 1/2 - sin(4m*theta) / (4m*sin(2*theta)). Equals the exact
/// average of success_prob over that range.
/// Throws std::domain_error for a in {0, N} and std::invalid_argument for
/// m = 0.
double p_m(const RotationModel& model, uint64_t schedule_bound);

/// Critical schedule point m* = 1/sin(2*theta); for any m >= m* the random
/// iteration draw succeeds with probability at least 1/4. Satisfies
/// m* < sqrt(N/a) whenever a <= N/2.
/// Throws std::domain_error for a in {0, N}.
double critical_m(const RotationModel& model);

}  // namespace qsl
