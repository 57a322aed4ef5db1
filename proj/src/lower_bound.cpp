/**
 * Copyright 2026, the qsearchlab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qsl/lower_bound.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qsl {

namespace {

constexpr double kStepSlack = 1e-9;
constexpr double kSumSlack = 1e-6;

void apply_matrix(const Eigen::MatrixXcd& matrix, StateVector& state) {
  Eigen::Map<Eigen::VectorXcd> vec(state.amps().data(), static_cast<Eigen::Index>(state.size()));
  Eigen::VectorXcd result = matrix * vec;
  vec = result;
}

double output_probability(const StateVector& state, int output_bit) {
  const uint64_t mask = uint64_t{1} << output_bit;
  double total = 0.0;
  const uint64_t size = state.size();
  for (uint64_t i = 0; i < size; ++i) {
    if (i & mask) total += std::norm(state[i]);
  }
  return total;
}

void validate_algorithm(const AlgorithmSpec& alg) {
  if (alg.n < 1 || alg.m < alg.n || alg.m > 10 || alg.k < 0) {
    throw std::invalid_argument("AlgorithmSpec: bad register or query parameters");
  }
  if (alg.unitaries.size() != static_cast<size_t>(alg.k) + 1) {
    throw std::invalid_argument("AlgorithmSpec: expected k + 1 unitaries");
  }
  if (alg.output_bit < 0 || alg.output_bit >= alg.m) {
    throw std::invalid_argument("AlgorithmSpec: output bit out of range");
  }
  const auto dim = Eigen::Index{1} << alg.m;
  for (const auto& u : alg.unitaries) {
    if (u.rows() != dim || u.cols() != dim) {
      throw std::invalid_argument("AlgorithmSpec: unitary dimension mismatch");
    }
  }
}

// Transcript of the oracle run against a precomputed identity-oracle
// sequence phi^(0..k).
HybridTranscript hybrid_against(const AlgorithmSpec& alg, uint64_t r,
                                const std::vector<StateVector>& phi_seq) {
  const std::vector<uint64_t> marked{r};
  HybridTranscript transcript;
  transcript.r = r;
  transcript.steps.reserve(alg.k + 1);

  StateVector psi = phi_seq[0];  // psi^(0) = U_0|0^m> = phi^(0)
  for (int j = 0; j <= alg.k; ++j) {
    const StateVector& phi = phi_seq[j];
    HybridStep step;
    step.d = norm_diff(psi, phi);
    StateVector flipped = phi;
    apply_phase_flip(flipped, marked, alg.n);
    step.e = norm_diff(flipped, phi);
    step.proj = projection_norm(phi, marked, alg.n);
    transcript.steps.push_back(step);

    if (j < alg.k) {
      apply_phase_flip(psi, marked, alg.n);
      apply_matrix(alg.unitaries[j + 1], psi);
    }
  }

  const StateVector& phi_final = phi_seq[alg.k];
  transcript.p_r = output_probability(psi, alg.output_bit);
  transcript.q = output_probability(phi_final, alg.output_bit);
  transcript.trace_distance = trace_distance_pure(psi, phi_final);
  transcript.oracle_queries = static_cast<uint64_t>(alg.k);
  return transcript;
}

std::vector<StateVector> identity_sequence(const AlgorithmSpec& alg) {
  std::vector<StateVector> phi_seq;
  phi_seq.reserve(alg.k + 1);
  StateVector phi(alg.m);
  apply_matrix(alg.unitaries[0], phi);
  phi_seq.push_back(phi);
  for (int j = 1; j <= alg.k; ++j) {
    // identity oracle between layers: a counted no-op
    apply_matrix(alg.unitaries[j], phi);
    phi_seq.push_back(phi);
  }
  return phi_seq;
}

}  // namespace

Eigen::MatrixXcd haar_unitary(int dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("haar_unitary: dimension must be positive");
  Eigen::MatrixXcd ginibre(dim, dim);
  for (int row = 0; row < dim; ++row) {
    for (int col = 0; col < dim; ++col) {
      ginibre(row, col) = Complex(rng.gaussian(), rng.gaussian());
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& packed = qr.matrixQR();
  for (int col = 0; col < dim; ++col) {
    const Complex diag = packed(col, col);
    const double mag = std::abs(diag);
    q.col(col) *= (mag > 0.0) ? diag / mag : Complex{1.0, 0.0};
  }
  return q;
}

AlgorithmSpec random_algorithm(int n, int m, int k, Rng& rng) {
  if (m > 10) throw std::invalid_argument("random_algorithm: at most 10 qubits");
  if (n < 1 || m < n || k < 0) {
    throw std::invalid_argument("random_algorithm: bad register or query parameters");
  }
  AlgorithmSpec alg;
  alg.n = n;
  alg.m = m;
  alg.k = k;
  alg.output_bit = 0;
  alg.unitaries.reserve(k + 1);
  const int dim = 1 << m;
  for (int j = 0; j <= k; ++j) alg.unitaries.push_back(haar_unitary(dim, rng));
  return alg;
}

bool algorithm_is_unitary(const AlgorithmSpec& alg, double tol) {
  const auto dim = Eigen::Index{1} << alg.m;
  for (const auto& u : alg.unitaries) {
    const double deviation =
        (u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (deviation > tol) return false;
  }
  return true;
}

HybridTranscript run_hybrid(const AlgorithmSpec& alg, uint64_t r) {
  validate_algorithm(alg);
  if (r >= (uint64_t{1} << alg.n)) throw std::invalid_argument("run_hybrid: r out of domain");
  return hybrid_against(alg, r, identity_sequence(alg));
}

std::vector<HybridTranscript> run_hybrid_all(const AlgorithmSpec& alg) {
  validate_algorithm(alg);
  const std::vector<StateVector> phi_seq = identity_sequence(alg);
  const uint64_t domain = uint64_t{1} << alg.n;
  std::vector<HybridTranscript> transcripts;
  transcripts.reserve(domain);
  for (uint64_t r = 0; r < domain; ++r) {
    transcripts.push_back(hybrid_against(alg, r, phi_seq));
  }
  return transcripts;
}

ClaimDeReport check_claim_de(const HybridTranscript& transcript) {
  ClaimDeReport report;
  report.min_slack_d = std::numeric_limits<double>::infinity();
  report.min_slack_e = std::numeric_limits<double>::infinity();
  const size_t k = transcript.steps.empty() ? 0 : transcript.steps.size() - 1;
  for (size_t j = 0; j < k; ++j) {
    const HybridStep& step = transcript.steps[j];
    const double slack_d = step.d + step.e - transcript.steps[j + 1].d;
    const double slack_e = 2.0 * step.proj - step.e;
    report.min_slack_d = std::min(report.min_slack_d, slack_d);
    report.min_slack_e = std::min(report.min_slack_e, slack_e);
    if (slack_d < -kStepSlack || slack_e < -kStepSlack) report.ok = false;
  }
  return report;
}

SumBoundReport check_sum_bound(const AlgorithmSpec& alg) {
  const std::vector<HybridTranscript> transcripts = run_hybrid_all(alg);
  const double root_n = std::sqrt(static_cast<double>(uint64_t{1} << alg.n));

  SumBoundReport report;
  report.min_d = std::numeric_limits<double>::infinity();
  for (const auto& transcript : transcripts) {
    const double final_d = transcript.steps.back().d;
    report.sum_d += final_d;
    report.min_d = std::min(report.min_d, final_d);
  }
  report.sum_bound = 2.0 * alg.k * root_n;
  report.min_bound = 2.0 * alg.k / root_n;
  report.ok = report.sum_d <= report.sum_bound + kSumSlack &&
              report.min_d <= report.min_bound + kStepSlack;
  return report;
}

AdvantageReport check_advantage(const AlgorithmSpec& alg) {
  const std::vector<HybridTranscript> transcripts = run_hybrid_all(alg);
  const double root_n = std::sqrt(static_cast<double>(uint64_t{1} << alg.n));

  AdvantageReport report;
  report.min_slack_pointwise = std::numeric_limits<double>::infinity();
  double p_sum = 0.0;
  for (const auto& transcript : transcripts) {
    const double adv = std::abs(transcript.p_r - transcript.q);
    const double slack_td = transcript.trace_distance - adv;
    const double slack_d = transcript.steps.back().d - transcript.trace_distance;
    report.min_slack_pointwise = std::min({report.min_slack_pointwise, slack_td, slack_d});
    if (slack_td < -kStepSlack || slack_d < -kStepSlack) report.ok = false;
    p_sum += transcript.p_r;
  }
  const double domain = static_cast<double>(transcripts.size());
  report.avg_advantage = std::abs(p_sum / domain - transcripts.front().q);
  report.bound = 2.0 * alg.k / root_n;
  if (report.avg_advantage > report.bound + kSumSlack) report.ok = false;
  return report;
}

double trace_distance_pure(const StateVector& x, const StateVector& y) {
  const double overlap = std::abs(inner_product(x, y));
  return std::sqrt(std::max(0.0, 1.0 - overlap * overlap));
}

}  // namespace qsl
