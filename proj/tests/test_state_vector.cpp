/**
 * Copyright 2026, the qsearchlab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qsl/state_vector.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "qsl/analytic.hpp"

using namespace qsl;

namespace {

StateVector random_state(int n, Rng& rng) {
  StateVector state(n);
  double norm = 0.0;
  for (auto& amp : state.amps()) {
    amp = Complex(rng.gaussian(), rng.gaussian());
    norm += std::norm(amp);
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& amp : state.amps()) amp *= scale;
  return state;
}

std::vector<uint64_t> random_marked(int n, uint64_t count, Rng& rng) {
  std::vector<uint64_t> marked;
  while (marked.size() < count) {
    const uint64_t x = rng.uniform_below(uint64_t{1} << n);
    bool seen = false;
    for (uint64_t existing : marked) seen |= existing == x;
    if (!seen) marked.push_back(x);
  }
  return marked;
}

void expect_state_near(const StateVector& state, const std::vector<Complex>& ref, double tol) {
  ASSERT_EQ(state.size(), ref.size());
  for (uint64_t i = 0; i < state.size(); ++i) {
    EXPECT_NEAR(state[i].real(), ref[i].real(), tol) << "i=" << i;
    EXPECT_NEAR(state[i].imag(), ref[i].imag(), tol) << "i=" << i;
  }
}

}  // namespace

TEST(StateVector, UniformStateExamples) {
  const double r2 = 1.0 / std::sqrt(2.0);
  expect_state_near(uniform_state(1), {{r2, 0}, {r2, 0}}, 1e-15);
  expect_state_near(uniform_state(2), {{0.5, 0}, {0.5, 0}, {0.5, 0}, {0.5, 0}}, 1e-15);
  const StateVector u3 = uniform_state(3);
  for (uint64_t i = 0; i < 8; ++i) EXPECT_NEAR(u3[i].real(), 1.0 / (2.0 * std::sqrt(2.0)), 1e-15);
  EXPECT_THROW(uniform_state(0), std::invalid_argument);
  EXPECT_THROW(uniform_state(25), std::invalid_argument);
}

TEST(StateVector, OracleSpecValidation) {
  EXPECT_THROW(OracleSpec(2, {4}), std::invalid_argument);
  EXPECT_THROW(OracleSpec(0, {}), std::invalid_argument);
  const OracleSpec oracle(3, {5, 1, 5, 3});
  EXPECT_EQ(oracle.marked(), (std::vector<uint64_t>{1, 3, 5}));
  EXPECT_TRUE(oracle.contains(3));
  EXPECT_FALSE(oracle.contains(0));
  EXPECT_EQ(oracle.queries(), 0u);
}

TEST(StateVector, PhaseOracleExamples) {
  OracleSpec oracle(2, {3});
  StateVector state = uniform_state(2);
  apply_phase_oracle(state, oracle);
  expect_state_near(state, {{0.5, 0}, {0.5, 0}, {0.5, 0}, {-0.5, 0}}, 1e-15);
  EXPECT_EQ(oracle.queries(), 1u);

  OracleSpec empty(2, {});
  StateVector unchanged = uniform_state(2);
  apply_phase_oracle(unchanged, empty);
  expect_state_near(unchanged, {{0.5, 0}, {0.5, 0}, {0.5, 0}, {0.5, 0}}, 1e-15);
  EXPECT_EQ(empty.queries(), 1u);  // the query is spent even when nothing flips

  OracleSpec all(2, {0, 1, 2, 3});
  StateVector flipped = uniform_state(2);
  apply_phase_oracle(flipped, all);
  expect_state_near(flipped, {{-0.5, 0}, {-0.5, 0}, {-0.5, 0}, {-0.5, 0}}, 1e-15);
}

TEST(StateVector, PhaseOracleActsBlockwise) {
  // Oracle on the low 2 qubits of a 3-qubit register: indices 3 and 7 flip.
  OracleSpec oracle(2, {3});
  StateVector state = uniform_state(3);
  apply_phase_oracle(state, oracle);
  const double amp = 1.0 / (2.0 * std::sqrt(2.0));
  for (uint64_t i = 0; i < 8; ++i) {
    const double expected = (i == 3 || i == 7) ? -amp : amp;
    EXPECT_NEAR(state[i].real(), expected, 1e-15);
  }
}

TEST(StateVector, BitOracleComputesIntoTarget) {
  OracleSpec oracle(2, {2});
  StateVector state = basis_state(3, 2);  // |x=2>|0>
  apply_bit_oracle(state, oracle, 2);
  expect_state_near(state, {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}},
                    1e-15);  // |x=2>|1> = index 6

  StateVector plain = basis_state(3, 1);  // unmarked input stays put
  apply_bit_oracle(plain, oracle, 2);
  EXPECT_NEAR(plain[1].real(), 1.0, 1e-15);
}

TEST(StateVector, BitOracleKickbackMatchesPhaseOracle) {
  // With the target prepared in |->, the bit oracle acts as the phase
  // oracle times identity on the target.
  Rng rng(11);
  const int n = 3;
  OracleSpec oracle(n, random_marked(n, 3, rng));

  StateVector low = random_state(n, rng);
  StateVector with_ancilla(n + 1);
  const double r2 = 1.0 / std::sqrt(2.0);
  for (uint64_t x = 0; x < low.size(); ++x) {
    with_ancilla[x] = low[x] * r2;
    with_ancilla[x | (uint64_t{1} << n)] = -low[x] * r2;
  }

  apply_bit_oracle(with_ancilla, oracle, n);
  StateVector expected_low = low;
  apply_phase_flip(expected_low, oracle.marked(), n);
  for (uint64_t x = 0; x < low.size(); ++x) {
    EXPECT_NEAR(with_ancilla[x].real(), expected_low[x].real() * r2, 1e-12);
    EXPECT_NEAR(with_ancilla[x].imag(), expected_low[x].imag() * r2, 1e-12);
    EXPECT_NEAR(with_ancilla[x | (uint64_t{1} << n)].real(), -expected_low[x].real() * r2, 1e-12);
  }
}

TEST(StateVector, DiffusionExamples) {
  StateVector state(2);
  state.amps() = {{0.5, 0}, {0.5, 0}, {0.5, 0}, {-0.5, 0}};
  apply_diffusion(state, 2);
  expect_state_near(state, {{0, 0}, {0, 0}, {0, 0}, {1, 0}}, 1e-15);

  StateVector fixed = uniform_state(4);
  apply_diffusion(fixed, 4);
  for (uint64_t i = 0; i < 16; ++i) EXPECT_NEAR(fixed[i].real(), 0.25, 1e-15);

  StateVector onehot = basis_state(2, 1);  // 2*mean - x with mean 1/4
  apply_diffusion(onehot, 2);
  expect_state_near(onehot, {{0.5, 0}, {-0.5, 0}, {0.5, 0}, {0.5, 0}}, 1e-15);
}

TEST(StateVector, DiffusionMatchesHadamardZ0Path) {
  // Two independent implementations of the same reflection:
  // inversion about the mean vs -H^n Z_0 H^n applied gate by gate.
  Rng rng(23);
  for (int n : {2, 3, 5}) {
    for (int m : {n, n + 2}) {
      StateVector state = random_state(m, rng);
      StateVector generic = state;
      apply_diffusion(state, n);

      apply_hadamard_layer(generic, 0, n);
      apply_phase_z0(generic, n);
      apply_hadamard_layer(generic, 0, n);
      for (auto& amp : generic.amps()) amp = -amp;

      EXPECT_LT(norm_diff(state, generic), 1e-9) << "n=" << n << " m=" << m;
    }
  }
}

TEST(StateVector, GroverIterationCertaintyAtQuarterFraction) {
  OracleSpec oracle(2, {3});
  StateVector state = uniform_state(2);
  apply_grover_iteration(state, oracle);
  expect_state_near(state, {{0, 0}, {0, 0}, {0, 0}, {1, 0}}, 1e-12);
  EXPECT_EQ(oracle.queries(), 1u);
}

TEST(StateVector, GroverIterationEmptyOracleIsIdentity) {
  OracleSpec oracle(3, {});
  StateVector state = uniform_state(3);
  apply_grover_iteration(state, oracle);
  StateVector expected = uniform_state(3);
  EXPECT_LT(norm_diff(state, expected), 1e-12);
}

TEST(StateVector, GroverIterationClosedFormAmplitudes) {
  Rng rng(5);
  const int n = 6;
  const uint64_t domain = uint64_t{1} << n;
  for (uint64_t a : {uint64_t{1}, uint64_t{5}, uint64_t{32}}) {
    OracleSpec oracle(n, random_marked(n, a, rng));
    const RotationModel model = make_model(n, a);
    StateVector state = uniform_state(n);
    for (uint64_t k = 1; k <= 12; ++k) {
      apply_grover_iteration(state, oracle);
      const double angle = (2.0 * k + 1.0) * model.theta;
      const double marked_amp = std::sin(angle) / std::sqrt(static_cast<double>(a));
      const double unmarked_amp = std::cos(angle) / std::sqrt(static_cast<double>(domain - a));
      for (uint64_t x = 0; x < domain; ++x) {
        const double expected = oracle.contains(x) ? marked_amp : unmarked_amp;
        ASSERT_NEAR(state[x].real(), expected, 1e-9) << "a=" << a << " k=" << k << " x=" << x;
        ASSERT_NEAR(state[x].imag(), 0.0, 1e-9);
      }
    }
  }
}

TEST(StateVector, GroverIterationAdvancesPlaneAngleByTwoTheta) {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng.uniform_below(4));
    const uint64_t domain = uint64_t{1} << n;
    const uint64_t a = 1 + rng.uniform_below(domain - 1);
    OracleSpec oracle(n, random_marked(n, a, rng));
    const RotationModel model = make_model(n, a);

    StateVector good(n), bad(n);
    good[0] = Complex{0, 0};
    bad[0] = Complex{0, 0};
    for (uint64_t x = 0; x < domain; ++x) {
      if (oracle.contains(x)) {
        good[x] = Complex{1.0 / std::sqrt(static_cast<double>(a)), 0.0};
      } else {
        bad[x] = Complex{1.0 / std::sqrt(static_cast<double>(domain - a)), 0.0};
      }
    }

    // Random plane state alpha|A> + beta|B>, complex coefficients.
    Complex alpha(rng.gaussian(), rng.gaussian());
    Complex beta(rng.gaussian(), rng.gaussian());
    const double scale = std::sqrt(std::norm(alpha) + std::norm(beta));
    alpha /= scale;
    beta /= scale;

    StateVector state(n);
    for (uint64_t x = 0; x < domain; ++x) state[x] = alpha * good[x] + beta * bad[x];
    apply_phase_flip(state, oracle.marked(), n);
    apply_diffusion(state, n);

    const double c = std::cos(2.0 * model.theta);
    const double s = std::sin(2.0 * model.theta);
    const Complex expected_alpha = c * alpha + s * beta;
    const Complex expected_beta = -s * alpha + c * beta;
    const Complex got_alpha = inner_product(good, state);
    const Complex got_beta = inner_product(bad, state);
    EXPECT_NEAR(std::abs(got_alpha - expected_alpha), 0.0, 1e-9);
    EXPECT_NEAR(std::abs(got_beta - expected_beta), 0.0, 1e-9);
    // Still inside the plane.
    EXPECT_NEAR(std::norm(got_alpha) + std::norm(got_beta), 1.0, 1e-9);
  }
}

TEST(StateVector, QftExamples) {
  StateVector zero(3);
  apply_qft(zero, 3);
  for (uint64_t i = 0; i < 8; ++i) {
    EXPECT_NEAR(zero[i].real(), 1.0 / (2.0 * std::sqrt(2.0)), 1e-12);
    EXPECT_NEAR(zero[i].imag(), 0.0, 1e-12);
  }

  StateVector single = basis_state(1, 1);
  apply_qft(single, 1);  // t = 1 is the Hadamard
  const double r2 = 1.0 / std::sqrt(2.0);
  expect_state_near(single, {{r2, 0}, {-r2, 0}}, 1e-12);
}

TEST(StateVector, QftRoundTripsWithInverse) {
  Rng rng(31);
  StateVector state = random_state(6, rng);
  StateVector original = state;
  apply_qft(state, 6);
  apply_inverse_qft(state, 6);
  EXPECT_LT(norm_diff(state, original), 1e-9);
}

TEST(StateVector, QftMatchesDirectKernel) {
  Rng rng(37);
  for (int t = 1; t <= 8; ++t) {
    const uint64_t dim = uint64_t{1} << t;
    StateVector state = random_state(t, rng);
    StateVector expected(t);
    for (uint64_t j = 0; j < dim; ++j) {
      Complex total{0, 0};
      for (uint64_t k = 0; k < dim; ++k) {
        const double angle = 2.0 * M_PI * static_cast<double>(j) * static_cast<double>(k) /
                             static_cast<double>(dim);
        total += std::polar(1.0, angle) * state[k];
      }
      expected[j] = total / std::sqrt(static_cast<double>(dim));
    }
    apply_qft(state, t);
    EXPECT_LT(norm_diff(state, expected), 1e-9) << "t=" << t;
  }
}

TEST(StateVector, QftOffsetRegister) {
  Rng rng(41);
  const int t = 3, offset = 2, m = 6;
  StateVector state = random_state(m, rng);
  StateVector expected(m);
  const uint64_t reg = uint64_t{1} << t;
  for (uint64_t high = 0; high < (uint64_t{1} << (m - offset - t)); ++high) {
    for (uint64_t low = 0; low < (uint64_t{1} << offset); ++low) {
      const uint64_t base = (high << (offset + t)) | low;
      for (uint64_t j = 0; j < reg; ++j) {
        Complex total{0, 0};
        for (uint64_t k = 0; k < reg; ++k) {
          const double angle =
              2.0 * M_PI * static_cast<double>(j * k) / static_cast<double>(reg);
          total += std::polar(1.0, angle) * state[base + (k << offset)];
        }
        expected[base + (j << offset)] = total / std::sqrt(static_cast<double>(reg));
      }
    }
  }
  apply_qft(state, t, offset);
  EXPECT_LT(norm_diff(state, expected), 1e-9);
}

TEST(StateVector, ControlledPowerAppliesOnlyToSetBranch) {
  // op multiplies the (1-qubit) target by i; the control-0 branch must stay.
  auto phase_op = [](StateVector& s) {
    for (auto& amp : s.amps()) amp *= Complex{0, 1};
  };
  StateVector state(2);
  state.amps() = {{0.5, 0}, {0.5, 0}, {0.5, 0}, {0.5, 0}};
  controlled_power(state, 1, 1, phase_op, 1);  // i^2 = -1 on the control-1 half
  expect_state_near(state, {{0.5, 0}, {0.5, 0}, {-0.5, 0}, {-0.5, 0}}, 1e-12);

  StateVector zero_branch = basis_state(2, 1);  // control qubit is 0
  controlled_power(zero_branch, 1, 1, phase_op, 3);
  expect_state_near(zero_branch, {{0, 0}, {1, 0}, {0, 0}, {0, 0}}, 1e-15);
}

TEST(StateVector, ControlledPowerPhasesEigenvector) {
  // Grover operator for n=2, marked {3}: eigenvector (|A> + i|B>)/sqrt(2)
  // with eigenvalue e^{i 2 theta}, theta = pi/6.
  OracleSpec oracle(2, {3});
  const double theta = M_PI / 6;
  auto grover_op = [&oracle](StateVector& s) {
    apply_phase_flip(s, oracle.marked(), 2);
    apply_diffusion(s, 2);
  };

  for (int j : {0, 1}) {
    StateVector state(3);
    const Complex i_unit{0, 1};
    const double inv_r3 = 1.0 / std::sqrt(3.0);
    // control (qubit 2) in |1>, target in psi_plus
    for (uint64_t x = 0; x < 3; ++x) state[4 + x] = i_unit * inv_r3 / std::sqrt(2.0);
    state[0] = Complex{0, 0};
    state[4 + 3] = Complex{1.0 / std::sqrt(2.0), 0};
    StateVector expected = state;

    controlled_power(state, 2, 2, grover_op, j);
    const Complex phase = std::polar(1.0, 2.0 * theta * static_cast<double>(1 << j));
    for (uint64_t x = 4; x < 8; ++x) expected[x] *= phase;
    EXPECT_LT(norm_diff(state, expected), 1e-9) << "j=" << j;
  }
}

TEST(StateVector, OperationsPreserveNorm) {
  Rng rng(43);
  const int n = 5;
  OracleSpec oracle(n, random_marked(n, 6, rng));
  StateVector state = random_state(n, rng);
  const auto check = [&state](const char* label) {
    EXPECT_NEAR(state.norm_sq(), 1.0, 1e-9) << label;
  };
  apply_phase_oracle(state, oracle);
  check("oracle");
  apply_diffusion(state, n);
  check("diffusion");
  apply_hadamard_layer(state, 0, n);
  check("hadamard layer");
  apply_qft(state, n);
  check("qft");
  apply_inverse_qft(state, 3, 1);
  check("inverse qft, offset");
  for (int i = 0; i < 50; ++i) apply_grover_iteration(state, oracle);
  check("50 grover iterations");
}

TEST(StateVector, MeasureOneHotIsDeterministic) {
  Rng rng(3);
  StateVector state = basis_state(4, 9);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(measure(state, rng), 9u);
}

TEST(StateVector, MeasureUniformFrequencies) {
  Rng rng(17);
  StateVector state = uniform_state(2);
  std::vector<int> counts(4, 0);
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) counts[measure(state, rng)]++;
  double chi_sq = 0.0;
  for (int c : counts) {
    const double expected = draws / 4.0;
    chi_sq += (c - expected) * (c - expected) / expected;
  }
  EXPECT_LT(chi_sq, 16.266);  // 0.999 quantile at 3 dof
}

TEST(StateVector, MeasureMatchesClosedFormSuccess) {
  OracleSpec oracle(10, {511});
  const RotationModel model = make_model(10, 1);
  StateVector state = uniform_state(10);
  for (int k = 0; k < 24; ++k) apply_grover_iteration(state, oracle);

  Rng rng(29);
  const int draws = 10000;
  int hits = 0;
  for (int i = 0; i < draws; ++i) hits += measure(state, rng) == 511 ? 1 : 0;
  const double expected = success_prob(model, 24);
  const double stderr3 = 3.0 * std::sqrt(expected * (1.0 - expected) / draws);
  EXPECT_NEAR(static_cast<double>(hits) / draws, expected, stderr3 + 1e-4);
}

TEST(StateVector, MeasureRejectsDriftedNorm) {
  Rng rng(1);
  StateVector state = uniform_state(3);
  for (auto& amp : state.amps()) amp *= 1.01;
  EXPECT_THROW(measure(state, rng), std::runtime_error);
}

TEST(StateVector, InnerProductAndNormDiffExamples) {
  Rng rng(13);
  StateVector x = random_state(4, rng);
  EXPECT_NEAR(std::abs(inner_product(x, x) - Complex{1, 0}), 0.0, 1e-12);
  EXPECT_DOUBLE_EQ(norm_diff(x, x), 0.0);

  StateVector a = basis_state(3, 1);
  StateVector b = basis_state(3, 6);
  EXPECT_NEAR(std::abs(inner_product(a, b)), 0.0, 1e-15);
  EXPECT_NEAR(norm_diff(a, b), std::sqrt(2.0), 1e-12);

  // ||Z_r|h> - |h>|| = 2/sqrt(N)
  const int n = 4;
  StateVector h = uniform_state(n);
  StateVector flipped = h;
  apply_phase_flip(flipped, {7}, n);
  EXPECT_NEAR(norm_diff(flipped, h), 2.0 / std::sqrt(16.0), 1e-12);
}

TEST(StateVector, MarkedProbabilityAndProjection) {
  OracleSpec oracle(2, {3});
  StateVector state = uniform_state(2);
  EXPECT_NEAR(marked_probability(state, oracle), 0.25, 1e-12);
  EXPECT_NEAR(projection_norm(state, oracle), 0.5, 1e-12);

  // blockwise on a wider register
  StateVector wide = uniform_state(4);
  EXPECT_NEAR(marked_probability(wide, oracle), 0.25, 1e-12);
}
