/**
 * Copyright 2026, the qsearchlab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#pragma once

#include <atomic>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "qsl/rng.hpp"

namespace qsl {

using Complex = std::complex<double>;

/// Dense state vector over m qubits (2^m complex amplitudes).
///
/// Register layout convention, used by every operation in this library:
/// qubit 0 is the least significant bit of the amplitude index. Operations
/// that act on "the low n qubits" apply blockwise for each fixed setting of
/// the remaining high qubits.
class StateVector {
 public:
  static constexpr int kMaxQubits = 24;  // 256 MiB of amplitudes

  /// |0...0> on the given number of qubits.
  explicit StateVector(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  uint64_t size() const { return amps_.size(); }

  Complex& operator[](uint64_t i) { return amps_[i]; }
  const Complex& operator[](uint64_t i) const { return amps_[i]; }

  std::vector<Complex>& amps() { return amps_; }
  const std::vector<Complex>& amps() const { return amps_; }

  /// Sum of squared amplitude magnitudes.
  double norm_sq() const;

 private:
  int num_qubits_;
  std::vector<Complex> amps_;
};

/// A marked subset of {0, ..., 2^n - 1} together with a query counter.
/// The counter is atomic so replicated experiments may share one oracle;
/// classical membership checks via contains() are not counted as quantum
/// queries.
class OracleSpec {
 public:
  OracleSpec(int num_qubits, std::vector<uint64_t> marked);

  OracleSpec(const OracleSpec& other);
  OracleSpec& operator=(const OracleSpec& other);

  int num_qubits() const { return num_qubits_; }
  uint64_t domain_size() const { return uint64_t{1} << num_qubits_; }
  const std::vector<uint64_t>& marked() const { return marked_; }
  uint64_t marked_count() const { return marked_.size(); }

  /// Classical evaluation of f(x).
  bool contains(uint64_t x) const;

  uint64_t queries() const { return queries_.load(std::memory_order_relaxed); }

  /// Adds abstract-circuit query cost (e.g. the 2^t - 1 controlled
  /// iterations of a phase-estimation run simulated without applying them
  /// one by one).
  void charge(uint64_t count) const {
    queries_.fetch_add(count, std::memory_order_relaxed);
  }

 private:
  int num_qubits_;
  std::vector<uint64_t> marked_;  // sorted, deduplicated
  mutable std::atomic<uint64_t> queries_{0};
};

// --- state preparation ---

/// Uniform superposition over the low n qubits (the full register).
StateVector uniform_state(int num_qubits);

/// Computational basis state |index> on num_qubits qubits.
StateVector basis_state(int num_qubits, uint64_t index);

// --- oracle and diffusion ---

/// Phase flip on every index whose low n bits are in `marked`; no counter.
void apply_phase_flip(StateVector& state, const std::vector<uint64_t>& marked, int num_qubits);

/// Z_f: negates amplitudes of marked indices; counts one oracle query.
void apply_phase_oracle(StateVector& state, const OracleSpec& oracle);

/// Bit-flip oracle |x>|y> -> |x>|y xor f(x)> with the target qubit given by
/// index; counts one oracle query. Provided for the equivalence tests with
/// the phase form (phase kickback through a |-> target).
void apply_bit_oracle(StateVector& state, const OracleSpec& oracle, int target_qubit);

/// Z_0: negates the amplitude of every index whose low n bits are all zero.
void apply_phase_z0(StateVector& state, int num_qubits);

/// Inversion about the mean on each low-n block: x_i -> 2*mean - x_i.
/// Algebraically -H^n Z_0 H^n, computed in O(2^m) without a matrix.
void apply_diffusion(StateVector& state, int num_qubits);

/// One Grover iteration: diffusion after the phase oracle. Costs exactly
/// one oracle query; the diffusion is oracle-free.
void apply_grover_iteration(StateVector& state, const OracleSpec& oracle);

// --- single-qubit and register transforms ---

/// Hadamard on one qubit.
void apply_hadamard(StateVector& state, int qubit);

/// Hadamard on qubits [first, first + count).
void apply_hadamard_layer(StateVector& state, int first, int count);

/// Fourier transform with kernel e^{+2*pi*i*jk/2^t} / sqrt(2^t) on the
/// t-qubit register starting at qubit `offset`.
void apply_qft(StateVector& state, int t, int offset = 0);

/// Inverse transform (conjugate kernel); composes with apply_qft to the
/// identity.
void apply_inverse_qft(StateVector& state, int t, int offset = 0);

/// Applies `op` to the low target_qubits register 2^j times on the branch
/// where `control` is set. The control qubit must lie above the target
/// register. `op` receives each branch slice as a standalone state vector.
void controlled_power(StateVector& state, int control, int target_qubits,
                      const std::function<void(StateVector&)>& op, int j);

// --- measurement and metrics ---

/// Samples a basis index with probability |amp|^2. Throws std::runtime_error
/// if the norm drifted by more than 1e-6 (internal corruption signal).
uint64_t measure(const StateVector& state, Rng& rng);

/// Conjugate-linear inner product <x|y>.
Complex inner_product(const StateVector& x, const StateVector& y);

/// Euclidean norm of x - y, with no global-phase alignment.
double norm_diff(const StateVector& x, const StateVector& y);

/// Total probability mass on indices whose low n bits are marked.
double marked_probability(const StateVector& state, const OracleSpec& oracle);
double marked_probability(const StateVector& state, const std::vector<uint64_t>& marked,
                          int num_qubits);

/// Norm of the projection onto the marked subspace: sqrt of the mass above.
double projection_norm(const StateVector& state, const OracleSpec& oracle);
double projection_norm(const StateVector& state, const std::vector<uint64_t>& marked,
                       int num_qubits);

}  // namespace qsl
