/**
 * Copyright 2026, the qsearchlab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qsl/count.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "qsl/analytic.hpp"

namespace qsl {

namespace {

void require_precision(int t, int max_t) {
  if (t < 1 || t > max_t) {
    throw std::invalid_argument("phase estimation: precision qubits out of range");
  }
}

PhaseEstimate decode_code(int t, uint64_t y) {
  PhaseEstimate est;
  est.t = t;
  est.y = y;
  est.theta_tilde = M_PI * static_cast<double>(y) / static_cast<double>(uint64_t{1} << t);
  const double s = std::sin(est.theta_tilde);
  est.alpha_tilde = s * s;
  return est;
}

// Builds the ancilla marginal of the full phase-estimation circuit.
// `charge` books the preparation and the 2^t - 1 controlled iterations on
// the amplifier's ledgers; the analysis path leaves them untouched.
std::vector<double> pe_ancilla_marginal(const Amplifier& amplifier, int t, bool charge) {
  const int n = amplifier.num_qubits();
  require_precision(t, StateVector::kMaxQubits - n);
  const double p = amplifier.success_probability();
  if (p <= 0.0 || p >= 1.0) {
    throw std::domain_error("phase estimation: degenerate success probability");
  }

  StateVector reg(t + n);
  StateVector prep = charge ? amplifier.prepare() : amplifier.prepare_uncounted();
  reg[0] = Complex{0.0, 0.0};
  for (uint64_t x = 0; x < prep.size(); ++x) reg[x] = prep[x];

  for (int q = n; q < n + t; ++q) apply_hadamard(reg, q);

  for (int j = 0; j < t; ++j) {
    controlled_power(
        reg, n + j, n, [&amplifier](StateVector& s) { amplifier.apply_iteration_uncounted(s); },
        j);
    if (charge) amplifier.charge_iterations(uint64_t{1} << j);
  }

  apply_inverse_qft(reg, t, n);

  const uint64_t codes = uint64_t{1} << t;
  const uint64_t block = uint64_t{1} << n;
  std::vector<double> probs(codes, 0.0);
  for (uint64_t y = 0; y < codes; ++y) {
    const uint64_t base = y << n;
    double mass = 0.0;
    for (uint64_t x = 0; x < block; ++x) mass += std::norm(reg[base | x]);
    probs[y] = mass;
  }
  return probs;
}

uint64_t round_ties_down(double value) {
  const double f = std::floor(value);
  const double frac = value - f;
  return static_cast<uint64_t>(frac > 0.5 ? f + 1.0 : f);
}

}  // namespace

double pe_code_probability(double omega, int t, uint64_t y) {
  const double codes = static_cast<double>(uint64_t{1} << t);
  double delta = omega - static_cast<double>(y) / codes;
  delta -= std::nearbyint(delta);
  if (delta == 0.0) return 1.0;
  const double ratio = std::sin(M_PI * codes * delta) / std::sin(M_PI * delta);
  return (ratio * ratio) / (codes * codes);
}

std::vector<double> pe_output_distribution_fast(double theta, int t) {
  require_precision(t, 24);
  const uint64_t codes = uint64_t{1} << t;
  const double omega_plus = theta / M_PI;
  const double omega_minus = 1.0 - omega_plus;
  std::vector<double> probs(codes);
  for (uint64_t y = 0; y < codes; ++y) {
    probs[y] =
        0.5 * (pe_code_probability(omega_plus, t, y) + pe_code_probability(omega_minus, t, y));
  }
  return probs;
}

std::vector<double> pe_output_distribution_full(const Amplifier& amplifier, int t) {
  return pe_ancilla_marginal(amplifier, t, /*charge=*/false);
}

double pe_mass_near_codes(double theta, int t) {
  const uint64_t codes = uint64_t{1} << t;
  const double codes_d = static_cast<double>(codes);
  const double omega_plus = theta / M_PI;
  std::set<uint64_t> window;
  for (double omega : {omega_plus, 1.0 - omega_plus}) {
    const double code = omega * codes_d;
    const auto lo = static_cast<int64_t>(std::floor(code)) - 1;
    for (int64_t y = lo; y <= lo + 3; ++y) {
      double dist = std::abs(static_cast<double>(y) - code);
      dist = std::min(dist, codes_d - dist);  // circular distance
      if (dist <= 1.0 + 1e-12) {
        window.insert(static_cast<uint64_t>(((y % static_cast<int64_t>(codes)) +
                                             static_cast<int64_t>(codes)) %
                                            static_cast<int64_t>(codes)));
      }
    }
  }
  double mass = 0.0;
  for (uint64_t y : window) {
    mass += 0.5 * (pe_code_probability(omega_plus, t, y) +
                   pe_code_probability(1.0 - omega_plus, t, y));
  }
  return mass;
}

uint64_t sample_pe_code(double omega, int t, Rng& rng) {
  require_precision(t, 30);
  const uint64_t codes = uint64_t{1} << t;
  const auto signed_codes = static_cast<int64_t>(codes);
  const auto center = static_cast<int64_t>(std::llround(omega * static_cast<double>(codes)));

  const double target = rng.uniform_double();
  double cumulative = 0.0;
  uint64_t last = center % signed_codes >= 0 ? static_cast<uint64_t>(center % signed_codes) : 0;
  // Visit codes by distance from the peak; the mass concentrates there, so
  // the walk ends after O(1) steps in expectation.
  for (uint64_t step = 0; step < codes; ++step) {
    const int64_t offset = (step % 2 == 1) ? static_cast<int64_t>((step + 1) / 2)
                                           : -static_cast<int64_t>(step / 2);
    const int64_t raw = (center + offset) % signed_codes;
    const uint64_t y = static_cast<uint64_t>(raw < 0 ? raw + signed_codes : raw);
    cumulative += pe_code_probability(omega, t, y);
    last = y;
    if (target < cumulative) return y;
  }
  return last;
}

PhaseEstimate phase_estimate_full(const Amplifier& amplifier, int t, Rng& rng) {
  const std::vector<double> probs = pe_ancilla_marginal(amplifier, t, /*charge=*/true);
  const uint64_t y = sample_discrete(probs, rng);
  return decode_code(t, y);
}

PhaseEstimate phase_estimate_fast(const Amplifier& amplifier, int t, Rng& rng) {
  require_precision(t, 30);
  const double p = amplifier.success_probability();
  if (p <= 0.0 || p >= 1.0) {
    throw std::domain_error("phase estimation: degenerate success probability");
  }
  const double omega_plus = amplifier.theta() / M_PI;
  const double omega = rng.uniform_double() < 0.5 ? omega_plus : 1.0 - omega_plus;
  const uint64_t y = sample_pe_code(omega, t, rng);
  amplifier.charge_iterations((uint64_t{1} << t) - 1);
  return decode_code(t, y);
}

PhaseEstimate count_marked(const OracleSpec& oracle, int t, Rng& rng, bool detect_degenerate) {
  require_precision(t, 30);
  const uint64_t domain = oracle.domain_size();
  const uint64_t a = oracle.marked_count();
  const uint64_t codes = uint64_t{1} << t;

  if (a == 0 || a == domain) {
    // The eigenphase fraction is exactly 0 (a = 0, eigenvalue +1) or 1/2
    // (a = N, eigenvalue -1), so the outcome is deterministic.
    if (!detect_degenerate) oracle.charge(codes - 1);
    PhaseEstimate est = decode_code(t, a == 0 ? 0 : codes / 2);
    est.a_tilde = static_cast<double>(domain) * est.alpha_tilde;
    return est;
  }

  const double theta =
      std::asin(std::sqrt(static_cast<double>(a) / static_cast<double>(domain)));
  const double omega_plus = theta / M_PI;
  const double omega = rng.uniform_double() < 0.5 ? omega_plus : 1.0 - omega_plus;
  const uint64_t y = sample_pe_code(omega, t, rng);
  oracle.charge(codes - 1);

  PhaseEstimate est = decode_code(t, y);
  est.a_tilde = static_cast<double>(domain) * est.alpha_tilde;
  return est;
}

SearchOutcome search_via_counting(const OracleSpec& oracle, int t, Rng& rng,
                                  const SearchParams& params) {
  require_precision(t, 30);
  const int n = oracle.num_qubits();
  const uint64_t domain = oracle.domain_size();
  SearchOutcome outcome;

  int t_current = t;
  for (int attempt = 0; attempt <= 3; ++attempt) {
    const PhaseEstimate est = count_marked(oracle, t_current, rng);
    outcome.total_queries += (uint64_t{1} << t_current) - 1;
    uint64_t a_hat = round_ties_down(*est.a_tilde);
    a_hat = std::clamp<uint64_t>(a_hat, 1, domain);

    if (2 * a_hat >= domain) {
      // Estimated majority of solutions: classical probes are cheaper than
      // any iteration count.
      for (int probe = 0; probe < 4; ++probe) {
        const uint64_t x = measure(uniform_state(n), rng);
        outcome.classical_evals += 1;
        const bool hit = oracle.contains(x);
        outcome.loops.push_back({static_cast<double>(a_hat), 0, x, hit});
        if (hit) {
          outcome.found = x;
          return outcome;
        }
      }
    } else {
      const uint64_t k = optimal_k(make_model(n, a_hat));
      StateVector state = uniform_state(n);
      for (uint64_t i = 0; i < k; ++i) apply_grover_iteration(state, oracle);
      const uint64_t x = measure(state, rng);
      outcome.total_queries += k;
      outcome.classical_evals += 1;
      const bool hit = oracle.contains(x);
      outcome.loops.push_back({static_cast<double>(a_hat), k, x, hit});
      if (hit) {
        outcome.found = x;
        return outcome;
      }
    }
    t_current = std::min(2 * t_current, 30);
  }

  const SearchOutcome fallback = search_unknown(oracle, params, rng);
  outcome.found = fallback.found;
  outcome.total_queries += fallback.total_queries;
  outcome.classical_evals += fallback.classical_evals;
  outcome.loops.insert(outcome.loops.end(), fallback.loops.begin(), fallback.loops.end());
  return outcome;
}

}  // namespace qsl
