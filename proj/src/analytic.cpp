/**
 * Copyright 2026, the qsearchlab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qsl/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace qsl {

RotationModel make_model(int num_qubits, uint64_t marked_count) {
  if (num_qubits < 1 || num_qubits > 30) {
    throw std::invalid_argument("make_model: qubit count must be in [1, 30]");
  }
  const uint64_t domain = uint64_t{1} << num_qubits;
  if (marked_count > domain) {
    throw std::invalid_argument("make_model: marked count exceeds domain size");
  }
  RotationModel model;
  model.num_qubits = num_qubits;
  model.domain_size = domain;
  model.marked_count = marked_count;
  model.theta = std::asin(std::sqrt(static_cast<double>(marked_count) /
                                    static_cast<double>(domain)));
  return model;
}

double success_prob(const RotationModel& model, uint64_t iterations) {
  if (model.marked_count == 0) return 0.0;
  if (model.marked_count == model.domain_size) return 1.0;
  const double angle = (2.0 * static_cast<double>(iterations) + 1.0) * model.theta;
  const double s = std::sin(angle);
  return s * s;
}

uint64_t optimal_iterations(double theta) {
  if (!(theta > 0.0) || theta > M_PI / 2) {
    throw std::domain_error("optimal_iterations: theta must be in (0, pi/2]");
  }
  // (2k+1)*theta should land as close to pi/2 as possible; rounding (ties
  // toward the smaller count) keeps |pi/2 - (2k+1)theta| <= theta, which is
  // what the 1 - a/N success guarantee needs. Flooring can overshoot the
  // half-way point and lose the guarantee.
  const double z = (M_PI / 2 - theta) / (2.0 * theta);
  const double floor_z = std::floor(z);
  const double frac = z - floor_z;
  double k = (frac > 0.5) ? floor_z + 1.0 : floor_z;
  if (k < 0.0) k = 0.0;
  return static_cast<uint64_t>(k);
}

uint64_t optimal_k(const RotationModel& model) {
  if (model.marked_count == 0) {
    throw std::domain_error("optimal_k: no solutions (a = 0)");
  }
  if (model.marked_count == model.domain_size) return 0;
  return optimal_iterations(model.theta);
}

double p_m(const RotationModel& model, uint64_t schedule_bound) {
  if (model.marked_count == 0 || model.marked_count == model.domain_size) {
    throw std::domain_error("p_m: degenerate angle (a in {0, N})");
  }
  if (schedule_bound == 0) {
    throw std::invalid_argument("p_m: schedule bound must be >= 1");
  }
  const double m = static_cast<double>(schedule_bound);
  return 0.5 - std::sin(4.0 * m * model.theta) / (4.0 * m * std::sin(2.0 * model.theta));
}

double critical_m(const RotationModel& model) {
  if (model.marked_count == 0 || model.marked_count == model.domain_size) {
    throw std::domain_error("critical_m: degenerate angle (a in {0, N})");
  }
  return 1.0 / std::sin(2.0 * model.theta);
}

}  // namespace qsl
