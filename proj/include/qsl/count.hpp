/**
 * Copyright 2026, the qsearchlab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qsl/amplify.hpp"
#include "qsl/rng.hpp"
#include "qsl/search.hpp"
#include "qsl/state_vector.hpp"

namespace qsl {

/// Result of one phase-estimation run. The amplification operator has
/// eigenvalues e^{+-i 2 theta}, so the eigenphase fraction is theta/pi and a
/// measured code y decodes to theta_tilde = pi * y / 2^t. alpha_tilde is
/// invariant under the mirror fold y -> 2^t - y, which swaps the +- branch.
struct PhaseEstimate {
  int t = 0;                       // precision qubits
  uint64_t y = 0;                  // measured code in [0, 2^t)
  double theta_tilde = 0.0;        // pi * y / 2^t
  double alpha_tilde = 0.0;        // sin^2(theta_tilde)
  std::optional<double> a_tilde;   // N * alpha_tilde, counting mode only
};

/// Exact probability that a single-eigenvector phase-estimation run with
/// eigenphase fraction omega outputs code y:
/// |(1/2^t) sum_j e^{i 2 pi j (omega - y/2^t)}|^2.
double pe_code_probability(double omega, int t, uint64_t y);

/// Exact output distribution of phase estimation on the prepared state
/// (equal mixture of the two eigenbranches), from the closed form.
std::vector<double> pe_output_distribution_fast(double theta, int t);

/// Exact output distribution from the full-tensor simulation: t ancilla
/// qubits, controlled G^{2^j} layers, inverse Fourier transform, marginal
/// over the ancilla register. Requires t + n <= 24. Counters untouched.
std::vector<double> pe_output_distribution_full(const Amplifier& amplifier, int t);

/// Exact probability mass within one code of the two true eigenphase codes
/// (circular distance |y - 2^t * theta/pi| <= 1, both branches pooled).
double pe_mass_near_codes(double theta, int t);

/// Samples a code from the single-branch distribution without enumerating
/// all 2^t outcomes: walks outward from the most likely code.
uint64_t sample_pe_code(double omega, int t, Rng& rng);

/// Phase estimation by simulating the full (t + n)-qubit register. The
/// target holds U|0>, not an eigenvector; the eigenbranch decomposition
/// guarantees a valid estimate either way. Books 2^t - 1 iterations.
/// Throws std::domain_error for p in {0, 1}.
PhaseEstimate phase_estimate_full(const Amplifier& amplifier, int t, Rng& rng);

/// Statistically identical sampler exploiting the two-dimensional invariant
/// subspace: draws the eigenbranch (probability 1/2 each), then a code from
/// the exact single-branch distribution. No t + n memory bound (t <= 30).
/// Books the same 2^t - 1 iterations.
PhaseEstimate phase_estimate_fast(const Amplifier& amplifier, int t, Rng& rng);

/// Quantum counting: amplitude estimation with U = H^n, alpha = a/N, so
/// a_tilde = N * sin^2(pi y / 2^t). Books 2^t - 1 oracle queries. With
/// detect_degenerate set, a = 0 and a = N short-circuit to the exact answer
/// without booking any query; otherwise the (deterministic) degenerate
/// estimate is returned with the usual cost.
PhaseEstimate count_marked(const OracleSpec& oracle, int t, Rng& rng,
                           bool detect_degenerate = false);

/// Search without knowing the number of solutions, driven by counting:
/// estimate a, round to a_hat >= 1 (ties toward the smaller count), run the
/// known-count search with a_hat; on a miss double t, up to three
/// escalations, then fall back to the exponential-schedule search. When
/// a_hat >= N/2 the classical probe branch applies.
SearchOutcome search_via_counting(const OracleSpec& oracle, int t, Rng& rng,
                                  const SearchParams& params = {});

}  // namespace qsl
