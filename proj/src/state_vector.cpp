/**
 * Copyright 2026, the qsearchlab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qsl/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsl {

namespace {

void require_register(const StateVector& state, int num_qubits, const char* who) {
  if (num_qubits < 1 || num_qubits > state.num_qubits()) {
    throw std::invalid_argument(std::string(who) + ": register does not fit the state");
  }
}

// Iterative radix-2 transform on a contiguous buffer of length 2^t with
// kernel e^{sign * 2*pi*i * jk / 2^t} / sqrt(2^t).
void fourier_inplace(std::vector<Complex>& buf, int sign) {
  const size_t n = buf.size();
  // bit-reversal permutation
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(buf[i], buf[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double angle = sign * 2.0 * M_PI / static_cast<double>(len);
    const Complex step = std::polar(1.0, angle);
    for (size_t base = 0; base < n; base += len) {
      Complex w{1.0, 0.0};
      for (size_t i = 0; i < len / 2; ++i) {
        const Complex even = buf[base + i];
        const Complex odd = buf[base + i + len / 2] * w;
        buf[base + i] = even + odd;
        buf[base + i + len / 2] = even - odd;
        w *= step;
      }
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& amp : buf) amp *= scale;
}

void fourier_register(StateVector& state, int t, int offset, int sign) {
  if (t < 1 || offset < 0 || offset + t > state.num_qubits()) {
    throw std::invalid_argument("apply_qft: register out of range");
  }
  const uint64_t reg_size = uint64_t{1} << t;
  const uint64_t stride = uint64_t{1} << offset;
  const uint64_t low_count = stride;
  const uint64_t high_count = state.size() >> (offset + t);
  std::vector<Complex> slice(reg_size);
  for (uint64_t high = 0; high < high_count; ++high) {
    for (uint64_t low = 0; low < low_count; ++low) {
      const uint64_t base = (high << (offset + t)) | low;
      for (uint64_t j = 0; j < reg_size; ++j) slice[j] = state[base + j * stride];
      fourier_inplace(slice, sign);
      for (uint64_t j = 0; j < reg_size; ++j) state[base + j * stride] = slice[j];
    }
  }
}

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("StateVector: qubit count must be in [1, 24]");
  }
  amps_.assign(uint64_t{1} << num_qubits, Complex{0.0, 0.0});
  amps_[0] = Complex{1.0, 0.0};
}

double StateVector::norm_sq() const {
  double total = 0.0;
  for (const auto& amp : amps_) total += std::norm(amp);
  return total;
}

OracleSpec::OracleSpec(int num_qubits, std::vector<uint64_t> marked)
    : num_qubits_(num_qubits), marked_(std::move(marked)) {
  if (num_qubits < 1 || num_qubits > StateVector::kMaxQubits) {
    throw std::invalid_argument("OracleSpec: qubit count must be in [1, 24]");
  }
  std::sort(marked_.begin(), marked_.end());
  marked_.erase(std::unique(marked_.begin(), marked_.end()), marked_.end());
  if (!marked_.empty() && marked_.back() >= domain_size()) {
    throw std::invalid_argument("OracleSpec: marked index out of domain");
  }
}

OracleSpec::OracleSpec(const OracleSpec& other)
    : num_qubits_(other.num_qubits_),
      marked_(other.marked_),
      queries_(other.queries()) {}

OracleSpec& OracleSpec::operator=(const OracleSpec& other) {
  if (this != &other) {
    num_qubits_ = other.num_qubits_;
    marked_ = other.marked_;
    queries_.store(other.queries(), std::memory_order_relaxed);
  }
  return *this;
}

bool OracleSpec::contains(uint64_t x) const {
  return std::binary_search(marked_.begin(), marked_.end(), x);
}

StateVector uniform_state(int num_qubits) {
  StateVector state(num_qubits);
  const double amp = 1.0 / std::sqrt(static_cast<double>(state.size()));
  std::fill(state.amps().begin(), state.amps().end(), Complex{amp, 0.0});
  return state;
}

StateVector basis_state(int num_qubits, uint64_t index) {
  StateVector state(num_qubits);
  if (index >= state.size()) throw std::invalid_argument("basis_state: index out of range");
  state[0] = Complex{0.0, 0.0};
  state[index] = Complex{1.0, 0.0};
  return state;
}

void apply_phase_flip(StateVector& state, const std::vector<uint64_t>& marked, int num_qubits) {
  require_register(state, num_qubits, "apply_phase_flip");
  const uint64_t blocks = state.size() >> num_qubits;
  for (uint64_t block = 0; block < blocks; ++block) {
    const uint64_t base = block << num_qubits;
    for (uint64_t x : marked) state[base | x] = -state[base | x];
  }
}

void apply_phase_oracle(StateVector& state, const OracleSpec& oracle) {
  apply_phase_flip(state, oracle.marked(), oracle.num_qubits());
  oracle.charge(1);
}

void apply_bit_oracle(StateVector& state, const OracleSpec& oracle, int target_qubit) {
  require_register(state, oracle.num_qubits(), "apply_bit_oracle");
  if (target_qubit < oracle.num_qubits() || target_qubit >= state.num_qubits()) {
    throw std::invalid_argument("apply_bit_oracle: target qubit must lie above the oracle register");
  }
  const uint64_t target_mask = uint64_t{1} << target_qubit;
  const uint64_t size = state.size();
  const uint64_t low_mask = (uint64_t{1} << oracle.num_qubits()) - 1;
  for (uint64_t i = 0; i < size; ++i) {
    if ((i & target_mask) == 0 && oracle.contains(i & low_mask)) {
      std::swap(state[i], state[i | target_mask]);
    }
  }
  oracle.charge(1);
}

void apply_phase_z0(StateVector& state, int num_qubits) {
  require_register(state, num_qubits, "apply_phase_z0");
  const uint64_t blocks = state.size() >> num_qubits;
  for (uint64_t block = 0; block < blocks; ++block) {
    const uint64_t base = block << num_qubits;
    state[base] = -state[base];
  }
}

void apply_diffusion(StateVector& state, int num_qubits) {
  require_register(state, num_qubits, "apply_diffusion");
  const uint64_t block_size = uint64_t{1} << num_qubits;
  const uint64_t blocks = state.size() >> num_qubits;
  for (uint64_t block = 0; block < blocks; ++block) {
    const uint64_t base = block << num_qubits;
    Complex sum{0.0, 0.0};
    for (uint64_t i = 0; i < block_size; ++i) sum += state[base + i];
    const Complex twice_mean = 2.0 * sum / static_cast<double>(block_size);
    for (uint64_t i = 0; i < block_size; ++i) state[base + i] = twice_mean - state[base + i];
  }
}

void apply_grover_iteration(StateVector& state, const OracleSpec& oracle) {
  apply_phase_oracle(state, oracle);
  apply_diffusion(state, oracle.num_qubits());
}

void apply_hadamard(StateVector& state, int qubit) {
  if (qubit < 0 || qubit >= state.num_qubits()) {
    throw std::invalid_argument("apply_hadamard: qubit out of range");
  }
  const uint64_t half = uint64_t{1} << qubit;
  const uint64_t stride = half << 1;
  const uint64_t size = state.size();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (uint64_t base = 0; base < size; base += stride) {
    for (uint64_t i = 0; i < half; ++i) {
      const Complex a = state[base + i];
      const Complex b = state[base + i + half];
      state[base + i] = (a + b) * inv_sqrt2;
      state[base + i + half] = (a - b) * inv_sqrt2;
    }
  }
}

void apply_hadamard_layer(StateVector& state, int first, int count) {
  for (int q = first; q < first + count; ++q) apply_hadamard(state, q);
}

void apply_qft(StateVector& state, int t, int offset) { fourier_register(state, t, offset, +1); }

void apply_inverse_qft(StateVector& state, int t, int offset) {
  fourier_register(state, t, offset, -1);
}

void controlled_power(StateVector& state, int control, int target_qubits,
                      const std::function<void(StateVector&)>& op, int j) {
  if (control < 0 || control >= state.num_qubits()) {
    throw std::invalid_argument("controlled_power: control qubit out of range");
  }
  if (target_qubits < 1 || control < target_qubits) {
    throw std::invalid_argument("controlled_power: control must lie above the target register");
  }
  if (j < 0 || j >= 63) throw std::invalid_argument("controlled_power: exponent index out of range");
  const uint64_t reps = uint64_t{1} << j;
  const uint64_t block_size = uint64_t{1} << target_qubits;
  const uint64_t blocks = state.size() >> target_qubits;
  const uint64_t control_block_bit = uint64_t{1} << (control - target_qubits);
  StateVector slice(target_qubits);
  for (uint64_t block = 0; block < blocks; ++block) {
    if ((block & control_block_bit) == 0) continue;
    const uint64_t base = block << target_qubits;
    for (uint64_t i = 0; i < block_size; ++i) slice[i] = state[base + i];
    for (uint64_t r = 0; r < reps; ++r) op(slice);
    for (uint64_t i = 0; i < block_size; ++i) state[base + i] = slice[i];
  }
}

uint64_t measure(const StateVector& state, Rng& rng) {
  const double total = state.norm_sq();
  if (std::abs(total - 1.0) > 1e-6) {
    throw std::runtime_error("measure: state norm drifted beyond 1e-6");
  }
  const double target = rng.uniform_double() * total;
  double cumulative = 0.0;
  const uint64_t size = state.size();
  for (uint64_t i = 0; i < size; ++i) {
    cumulative += std::norm(state[i]);
    if (target < cumulative) return i;
  }
  return size - 1;
}

Complex inner_product(const StateVector& x, const StateVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("inner_product: dimension mismatch");
  Complex total{0.0, 0.0};
  const uint64_t size = x.size();
  for (uint64_t i = 0; i < size; ++i) total += std::conj(x[i]) * y[i];
  return total;
}

double norm_diff(const StateVector& x, const StateVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("norm_diff: dimension mismatch");
  double total = 0.0;
  const uint64_t size = x.size();
  for (uint64_t i = 0; i < size; ++i) total += std::norm(x[i] - y[i]);
  return std::sqrt(total);
}

double marked_probability(const StateVector& state, const std::vector<uint64_t>& marked,
                          int num_qubits) {
  require_register(state, num_qubits, "marked_probability");
  const uint64_t blocks = state.size() >> num_qubits;
  double total = 0.0;
  for (uint64_t block = 0; block < blocks; ++block) {
    const uint64_t base = block << num_qubits;
    for (uint64_t x : marked) total += std::norm(state[base | x]);
  }
  return total;
}

double marked_probability(const StateVector& state, const OracleSpec& oracle) {
  return marked_probability(state, oracle.marked(), oracle.num_qubits());
}

double projection_norm(const StateVector& state, const std::vector<uint64_t>& marked,
                       int num_qubits) {
  return std::sqrt(marked_probability(state, marked, num_qubits));
}

double projection_norm(const StateVector& state, const OracleSpec& oracle) {
  return std::sqrt(marked_probability(state, oracle));
}

}  // namespace qsl
