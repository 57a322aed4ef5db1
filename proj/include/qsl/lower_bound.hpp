/**
 * Copyright 2026, the qsearchlab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qsl/rng.hpp"
#include "qsl/state_vector.hpp"

namespace qsl {

/// An arbitrary k-query algorithm: interleaved unitaries U_0, ..., U_k on m
/// qubits with an oracle call between consecutive ones. The oracle acts on
/// the low n qubits; the remaining m - n qubits are workspace. The final
/// 0/1 decision is the measured value of output_bit.
struct AlgorithmSpec {
  int n = 0;
  int m = 0;
  int k = 0;
  std::vector<Eigen::MatrixXcd> unitaries;  // k + 1 matrices of dimension 2^m
  int output_bit = 0;
};

/// Per-step record of the two runs of one algorithm, against the marked
/// singleton {r} and against the identity oracle:
///   d    = || psi_r^(j) - phi^(j) ||
///   e    = || O_r phi^(j) - phi^(j) ||
///   proj = || Pi_r phi^(j) ||
struct HybridStep {
  double d = 0.0;
  double e = 0.0;
  double proj = 0.0;
};

/// Full transcript of one algorithm/oracle pair: step records for
/// j = 0, ..., k, the acceptance probabilities under both oracles, and the
/// trace distance of the final states. Both runs consume exactly k oracle
/// queries (the identity oracle is a counted no-op).
struct HybridTranscript {
  uint64_t r = 0;
  std::vector<HybridStep> steps;
  double p_r = 0.0;
  double q = 0.0;
  double trace_distance = 0.0;
  uint64_t oracle_queries = 0;
};

/// Haar-distributed unitary: complex Ginibre matrix, QR decomposition, and
/// the diagonal phase correction that makes the distribution exactly Haar.
Eigen::MatrixXcd haar_unitary(int dim, Rng& rng);

/// Algorithm with k + 1 independent Haar-random unitaries. m <= 10.
AlgorithmSpec random_algorithm(int n, int m, int k, Rng& rng);

/// True when every unitary satisfies ||U*U - I||_max <= tol.
bool algorithm_is_unitary(const AlgorithmSpec& alg, double tol = 1e-9);

/// Runs the two hybrid sequences from |0^m> and records every quantity.
HybridTranscript run_hybrid(const AlgorithmSpec& alg, uint64_t r);

/// Transcripts for every r in {0, ..., 2^n - 1}; the identity-oracle
/// sequence is shared across targets.
std::vector<HybridTranscript> run_hybrid_all(const AlgorithmSpec& alg);

/// Per-step inequalities d^(j+1) <= d^(j) + e^(j) and e^(j) <= 2 proj^(j),
/// each within 1e-9 slack. A violation indicates a simulator bug: the
/// inequalities are theorems.
struct ClaimDeReport {
  bool ok = true;
  double min_slack_d = 0.0;  // min over j of d^(j) + e^(j) - d^(j+1)
  double min_slack_e = 0.0;  // min over j of 2 proj^(j) - e^(j)
};
ClaimDeReport check_claim_de(const HybridTranscript& transcript);

/// Sum bound over all oracles: sum_r d_r^(k) <= 2k sqrt(N) (slack 1e-6) and
/// its existential consequence min_r d_r^(k) <= 2k/sqrt(N) (slack 1e-9).
struct SumBoundReport {
  bool ok = true;
  double sum_d = 0.0;
  double sum_bound = 0.0;
  double min_d = 0.0;
  double min_bound = 0.0;
};
SumBoundReport check_sum_bound(const AlgorithmSpec& alg);

/// Distinguishing-advantage chain, everything computed exactly from state
/// vectors: |p_r - q| <= td_r <= d_r^(k) pointwise (slack 1e-9) and
/// |avg_r p_r - q| <= 2k/sqrt(N) (slack 1e-6).
struct AdvantageReport {
  bool ok = true;
  double avg_advantage = 0.0;
  double bound = 0.0;
  double min_slack_pointwise = 0.0;
};
AdvantageReport check_advantage(const AlgorithmSpec& alg);

/// Trace distance between pure states: sqrt(1 - |<x|y>|^2). Never exceeds
/// the Euclidean distance ||x - y||.
double trace_distance_pure(const StateVector& x, const StateVector& y);

}  // namespace qsl
