/**
 * Copyright 2026, the qsearchlab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qsl/amplify.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "qsl/analytic.hpp"

namespace qsl {

namespace {

void apply_matrix_action(const Eigen::MatrixXcd& matrix, StateVector& state) {
  if (static_cast<uint64_t>(matrix.rows()) != state.size()) {
    throw std::invalid_argument("Amplifier: state dimension does not match the unitary");
  }
  Eigen::Map<Eigen::VectorXcd> vec(state.amps().data(), static_cast<Eigen::Index>(state.size()));
  Eigen::VectorXcd result = matrix * vec;
  vec = result;
}

// -Z_0: keeps the |0...0> amplitude, negates every other one. Combined with
// U ... U* this realizes the reflection 2|psi><psi| - I.
void apply_minus_z0(StateVector& state) {
  const uint64_t size = state.size();
  for (uint64_t i = 1; i < size; ++i) state[i] = -state[i];
}

}  // namespace

Amplifier Amplifier::from_matrix(const Eigen::MatrixXcd& u, Predicate chi) {
  const Eigen::Index dim = u.rows();
  if (dim != u.cols() || dim < 2 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("Amplifier::from_matrix: dimension must be a power of two");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if (n > 10) throw std::invalid_argument("Amplifier::from_matrix: at most 10 qubits");
  const double unitarity =
      (u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (unitarity > 1e-9) {
    throw std::invalid_argument("Amplifier::from_matrix: matrix is not unitary within 1e-9");
  }

  auto forward = std::make_shared<Eigen::MatrixXcd>(u);
  auto adjoint = std::make_shared<Eigen::MatrixXcd>(u.adjoint());
  Amplifier amp;
  amp.num_qubits_ = n;
  amp.u_ = [forward](StateVector& s) { apply_matrix_action(*forward, s); };
  amp.u_adjoint_ = [adjoint](StateVector& s) { apply_matrix_action(*adjoint, s); };
  amp.chi_ = std::move(chi);
  amp.compute_success_probability();
  return amp;
}

Amplifier Amplifier::from_actions(int num_qubits, Action u, Action u_adjoint, Predicate chi) {
  if (num_qubits < 1 || num_qubits > StateVector::kMaxQubits) {
    throw std::invalid_argument("Amplifier::from_actions: qubit count out of range");
  }
  Amplifier amp;
  amp.num_qubits_ = num_qubits;
  amp.u_ = std::move(u);
  amp.u_adjoint_ = std::move(u_adjoint);
  amp.chi_ = std::move(chi);
  amp.compute_success_probability();
  return amp;
}

Amplifier Amplifier::grover(const OracleSpec& oracle) {
  Amplifier amp;
  amp.num_qubits_ = oracle.num_qubits();
  const int n = oracle.num_qubits();
  amp.u_ = [n](StateVector& s) { apply_hadamard_layer(s, 0, n); };
  amp.u_adjoint_ = amp.u_;  // H is self-adjoint
  amp.chi_ = [&oracle](uint64_t x) { return oracle.contains(x); };
  amp.oracle_ = &oracle;
  amp.p_ = static_cast<double>(oracle.marked_count()) / static_cast<double>(oracle.domain_size());
  amp.theta_ = std::asin(std::sqrt(amp.p_));
  return amp;
}

void Amplifier::compute_success_probability() {
  StateVector psi = prepare_uncounted();
  double p = 0.0;
  const uint64_t size = psi.size();
  for (uint64_t x = 0; x < size; ++x) {
    if (chi_(x)) p += std::norm(psi[x]);
  }
  p_ = p;
  theta_ = std::asin(std::sqrt(std::min(1.0, std::max(0.0, p))));
}

StateVector Amplifier::prepare_uncounted() const {
  StateVector state(num_qubits_);
  u_(state);
  return state;
}

StateVector Amplifier::prepare() const {
  u_invocations_.fetch_add(1, std::memory_order_relaxed);
  return prepare_uncounted();
}

void Amplifier::apply_iteration_uncounted(StateVector& state) const {
  if (state.num_qubits() != num_qubits_) {
    throw std::invalid_argument("Amplifier: state dimension mismatch");
  }
  if (oracle_ != nullptr) {
    // U = H^n: the full composition collapses to the oracle phase flip
    // followed by inversion about the mean.
    apply_phase_flip(state, oracle_->marked(), num_qubits_);
    apply_diffusion(state, num_qubits_);
    return;
  }
  // G = U (-Z_0) U* Z_chi, applied right to left.
  const uint64_t size = state.size();
  for (uint64_t x = 0; x < size; ++x) {
    if (chi_(x)) state[x] = -state[x];
  }
  u_adjoint_(state);
  apply_minus_z0(state);
  u_(state);
}

void Amplifier::apply_iteration(StateVector& state) const {
  apply_iteration_uncounted(state);
  charge_iterations(1);
}

void Amplifier::charge_iterations(uint64_t count) const {
  iterations_.fetch_add(count, std::memory_order_relaxed);
  u_invocations_.fetch_add(2 * count, std::memory_order_relaxed);
  if (oracle_ != nullptr) oracle_->charge(count);
}

AmplifyOutcome amplify_known(const Amplifier& amplifier, Rng& rng) {
  const double p = amplifier.success_probability();
  if (p <= 0.0) throw std::domain_error("amplify_known: nothing to amplify (p = 0)");
  const uint64_t k = optimal_iterations(amplifier.theta());

  StateVector state = amplifier.prepare();
  for (uint64_t i = 0; i < k; ++i) amplifier.apply_iteration(state);
  const uint64_t x = measure(state, rng);
  const bool hit = amplifier.good(x);

  AmplifyOutcome outcome;
  outcome.iterations = k;
  outcome.u_invocations = 1 + 2 * k;
  outcome.classical_evals = 1;
  outcome.loops.push_back({0.0, k, x, hit});
  if (hit) outcome.found = x;
  return outcome;
}

AmplifyOutcome amplify_unknown(const Amplifier& amplifier, const SearchParams& params, Rng& rng) {
  ScheduleHooks hooks;
  hooks.prepare = [&amplifier]() { return amplifier.prepare(); };
  hooks.iterate = [&amplifier](StateVector& s) { amplifier.apply_iteration(s); };
  hooks.accept = [&amplifier](uint64_t x) { return amplifier.good(x); };
  hooks.success_fraction = amplifier.success_probability();
  hooks.domain_size = uint64_t{1} << amplifier.num_qubits();
  const SearchOutcome run = run_exponential_schedule(hooks, params, rng);

  AmplifyOutcome outcome;
  outcome.found = run.found;
  outcome.iterations = run.total_queries;
  outcome.u_invocations = run.loops.size() + 2 * run.total_queries;
  outcome.classical_evals = run.classical_evals;
  outcome.loops = run.loops;
  return outcome;
}

EigenStructure eigen_structure(const Amplifier& amplifier) {
  const double p = amplifier.success_probability();
  if (p <= 0.0 || p >= 1.0) {
    throw std::domain_error("eigen_structure: plane degenerates for p in {0, 1}");
  }
  StateVector psi = amplifier.prepare();
  const int n = amplifier.num_qubits();
  StateVector good(n), bad(n);
  good[0] = Complex{0.0, 0.0};
  bad[0] = Complex{0.0, 0.0};
  const uint64_t size = psi.size();
  for (uint64_t x = 0; x < size; ++x) {
    if (amplifier.good(x)) {
      good[x] = psi[x];
    } else {
      bad[x] = psi[x];
    }
  }
  const double good_norm = std::sqrt(good.norm_sq());
  const double bad_norm = std::sqrt(bad.norm_sq());
  for (auto& amp : good.amps()) amp /= good_norm;
  for (auto& amp : bad.amps()) amp /= bad_norm;

  EigenStructure eigen{amplifier.theta(), StateVector(n), StateVector(n), Complex{}, Complex{}};
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Complex i_unit{0.0, 1.0};
  for (uint64_t x = 0; x < size; ++x) {
    eigen.psi_plus[x] = (good[x] + i_unit * bad[x]) * inv_sqrt2;
    eigen.psi_minus[x] = (good[x] - i_unit * bad[x]) * inv_sqrt2;
  }
  eigen.lambda_plus = std::polar(1.0, 2.0 * eigen.theta);
  eigen.lambda_minus = std::polar(1.0, -2.0 * eigen.theta);
  return eigen;
}

}  // namespace qsl
