/**
 * Copyright 2026, the qsearchlab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#pragma once

#include <Eigen/Dense>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qsl/search.hpp"
#include "qsl/state_vector.hpp"

namespace qsl {

/// Generic amplitude amplification around a state-preparation unitary U and
/// a predicate chi over basis indices. The amplification operator is
///   G = -U Z_0 U* Z_chi,
/// a rotation by 2*theta in the plane spanned by the normalized good and bad
/// projections of U|0>, with sin^2(theta) = p the success probability of a
/// single preparation.
class Amplifier {
 public:
  using Action = std::function<void(StateVector&)>;
  using Predicate = std::function<bool(uint64_t)>;

  /// From an explicit matrix (dimension 2^n, n <= 10). Throws
  /// std::invalid_argument if the columns are not orthonormal within 1e-9.
  static Amplifier from_matrix(const Eigen::MatrixXcd& u, Predicate chi);

  /// From black-box actions; the adjoint action must be supplied explicitly
  /// and is trusted.
  static Amplifier from_actions(int num_qubits, Action u, Action u_adjoint, Predicate chi);

  /// Specialization to U = H^n with chi = oracle membership, realized with
  /// the same kernels as the plain Grover iteration so searches through the
  /// amplifier reproduce oracle searches run-for-run. Borrows the oracle;
  /// it must outlive the amplifier.
  static Amplifier grover(const OracleSpec& oracle);

  Amplifier(const Amplifier& other) { *this = other; }
  Amplifier& operator=(const Amplifier& other) {
    if (this != &other) {
      num_qubits_ = other.num_qubits_;
      u_ = other.u_;
      u_adjoint_ = other.u_adjoint_;
      chi_ = other.chi_;
      oracle_ = other.oracle_;
      p_ = other.p_;
      theta_ = other.theta_;
      u_invocations_.store(other.u_invocations(), std::memory_order_relaxed);
      iterations_.store(other.iterations_applied(), std::memory_order_relaxed);
    }
    return *this;
  }

  int num_qubits() const { return num_qubits_; }

  /// p = sum over good x of |<x|U|0>|^2, computed at construction.
  double success_probability() const { return p_; }

  /// asin(sqrt(p)).
  double theta() const { return theta_; }

  bool good(uint64_t x) const { return chi_(x); }

  /// U|0...0>; counts one invocation of U.
  StateVector prepare() const;

  /// Applies G once; counts one iteration (one U and one U* invocation, and
  /// one oracle query when backed by an oracle).
  void apply_iteration(StateVector& state) const;

  /// Counter-free variants for simulator internals and analysis paths.
  StateVector prepare_uncounted() const;
  void apply_iteration_uncounted(StateVector& state) const;

  /// Books the cost of `count` iterations that were simulated without being
  /// applied one by one.
  void charge_iterations(uint64_t count) const;

  uint64_t u_invocations() const { return u_invocations_.load(std::memory_order_relaxed); }
  uint64_t iterations_applied() const { return iterations_.load(std::memory_order_relaxed); }

 private:
  Amplifier() = default;

  void compute_success_probability();

  int num_qubits_ = 0;
  Action u_;
  Action u_adjoint_;
  Predicate chi_;
  const OracleSpec* oracle_ = nullptr;  // set only for the Grover form
  double p_ = 0.0;
  double theta_ = 0.0;
  mutable std::atomic<uint64_t> u_invocations_{0};
  mutable std::atomic<uint64_t> iterations_{0};
};

/// Eigen-structure of G on its invariant plane: psi_pm = (psi_A +- i psi_B)
/// / sqrt(2) with eigenvalues e^{+-i 2 theta}, where psi_A and psi_B are the
/// normalized good and bad projections of U|0>.
struct EigenStructure {
  double theta = 0.0;
  StateVector psi_plus;
  StateVector psi_minus;
  Complex lambda_plus;
  Complex lambda_minus;
};

/// Result of one amplification run. iterations counts G applications;
/// u_invocations counts U and U* calls (one per preparation, two per G).
struct AmplifyOutcome {
  std::optional<uint64_t> found;
  uint64_t iterations = 0;
  uint64_t u_invocations = 0;
  uint64_t classical_evals = 0;
  std::vector<LoopRecord> loops;
};

/// Amplification with p known (computed internally): applies the optimal
/// number of iterations and measures once; success probability >= 1 - p.
/// Throws std::domain_error when p = 0.
AmplifyOutcome amplify_known(const Amplifier& amplifier, Rng& rng);

/// Amplification with p treated as unknown: the exponential schedule with G
/// in place of the Grover iteration. Expected U invocations O(1/sqrt(p)).
AmplifyOutcome amplify_unknown(const Amplifier& amplifier, const SearchParams& params, Rng& rng);

/// Constructs and verifies the eigen-structure. Throws std::domain_error
/// when p is 0 or 1 (the plane degenerates).
EigenStructure eigen_structure(const Amplifier& amplifier);

}  // namespace qsl
