/**
 * Copyright 2026, the qsearchlab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qsl/analytic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace qsl;

namespace {

// Assorted (n, a) pairs covering boundaries and bulk values.
std::vector<RotationModel> sample_models() {
  std::vector<RotationModel> models;
  for (int n : {1, 2, 3, 5, 8, 10, 12}) {
    const uint64_t domain = uint64_t{1} << n;
    for (uint64_t a : {uint64_t{1}, uint64_t{2}, domain / 4, domain / 2, domain - 1}) {
      if (a >= 1 && a <= domain) models.push_back(make_model(n, a));
    }
  }
  return models;
}

}  // namespace

TEST(Analytic, MakeModelExamples) {
  EXPECT_NEAR(make_model(2, 1).theta, M_PI / 6, 1e-12);
  EXPECT_NEAR(make_model(1, 1).theta, M_PI / 4, 1e-12);
  // asin(1/32), high-precision reference value
  EXPECT_NEAR(make_model(10, 1).theta, 0.031255088499495155, 1e-12);
  EXPECT_EQ(make_model(10, 3).domain_size, 1024u);
  EXPECT_EQ(make_model(10, 3).unmarked_count(), 1021u);
}

TEST(Analytic, MakeModelBoundaries) {
  EXPECT_DOUBLE_EQ(make_model(4, 0).theta, 0.0);
  EXPECT_NEAR(make_model(4, 16).theta, M_PI / 2, 1e-12);
  EXPECT_THROW(make_model(0, 0), std::invalid_argument);
  EXPECT_THROW(make_model(31, 1), std::invalid_argument);
  EXPECT_THROW(make_model(4, 17), std::invalid_argument);
}

TEST(Analytic, ModelAngleInvariant) {
  for (const auto& model : sample_models()) {
    const double expected =
        static_cast<double>(model.marked_count) / static_cast<double>(model.domain_size);
    EXPECT_NEAR(std::sin(model.theta) * std::sin(model.theta), expected, 1e-12);
  }
}

TEST(Analytic, SuccessProbExamples) {
  EXPECT_NEAR(success_prob(make_model(2, 1), 1), 1.0, 1e-12);
  EXPECT_NEAR(success_prob(make_model(2, 1), 0), 0.25, 1e-12);
  // sin^2(49 * asin(1/32)), high-precision reference value
  EXPECT_NEAR(success_prob(make_model(10, 1), 24), 0.9984565412944025, 1e-12);
}

TEST(Analytic, SuccessProbDegenerateCounts) {
  const RotationModel none = make_model(6, 0);
  const RotationModel all = make_model(6, 64);
  for (uint64_t k : {uint64_t{0}, uint64_t{1}, uint64_t{17}}) {
    EXPECT_DOUBLE_EQ(success_prob(none, k), 0.0);
    EXPECT_DOUBLE_EQ(success_prob(all, k), 1.0);
  }
}

TEST(Analytic, OptimalKExamples) {
  EXPECT_EQ(optimal_k(make_model(2, 1)), 1u);
  EXPECT_NEAR(success_prob(make_model(2, 1), optimal_k(make_model(2, 1))), 1.0, 1e-12);

  EXPECT_EQ(optimal_k(make_model(1, 1)), 0u);
  EXPECT_NEAR(success_prob(make_model(1, 1), 0), 0.5, 1e-12);

  // (pi/2 - theta)/(2 theta) = 24.6287 for n=10, a=1; 25 iterations land
  // closer to pi/2 than 24 and are required for the 1 - a/N guarantee.
  EXPECT_EQ(optimal_k(make_model(10, 1)), 25u);

  EXPECT_THROW(optimal_k(make_model(5, 0)), std::domain_error);
  EXPECT_EQ(optimal_k(make_model(5, 32)), 0u);
}

TEST(Analytic, OptimalKSuccessBound) {
  for (const auto& model : sample_models()) {
    const uint64_t k = optimal_k(model);
    const double floor = 1.0 - static_cast<double>(model.marked_count) /
                                   static_cast<double>(model.domain_size);
    EXPECT_GE(success_prob(model, k), floor - 1e-12)
        << "n=" << model.num_qubits << " a=" << model.marked_count << " k=" << k;
  }
}

TEST(Analytic, PmExamples) {
  for (const auto& model : sample_models()) {
    if (model.marked_count == model.domain_size) continue;
    const double ratio =
        static_cast<double>(model.marked_count) / static_cast<double>(model.domain_size);
    EXPECT_NEAR(p_m(model, 1), ratio, 1e-12);
  }
  // (sin^2(pi/6) + sin^2(pi/2)) / 2
  EXPECT_NEAR(p_m(make_model(2, 1), 2), 0.625, 1e-12);
}

TEST(Analytic, PmErrors) {
  EXPECT_THROW(p_m(make_model(3, 0), 2), std::domain_error);
  EXPECT_THROW(p_m(make_model(3, 8), 2), std::domain_error);
  EXPECT_THROW(p_m(make_model(3, 1), 0), std::invalid_argument);
}

TEST(Analytic, PmMatchesBruteForceAverage) {
  for (const auto& model : sample_models()) {
    if (model.marked_count == model.domain_size) continue;
    double running = 0.0;
    for (uint64_t m = 1; m <= 64; ++m) {
      running += success_prob(model, m - 1);
      EXPECT_NEAR(p_m(model, m), running / static_cast<double>(m), 1e-9)
          << "n=" << model.num_qubits << " a=" << model.marked_count << " m=" << m;
    }
  }
}

TEST(Analytic, PmFloorBeyondCriticalPoint) {
  for (const auto& model : sample_models()) {
    if (model.marked_count == model.domain_size) continue;
    const auto start = static_cast<uint64_t>(std::ceil(critical_m(model)));
    for (uint64_t m = start; m <= start + 40; ++m) {
      EXPECT_GE(p_m(model, m), 0.25 - 1e-12);
    }
  }
}

TEST(Analytic, CriticalMExamples) {
  EXPECT_NEAR(critical_m(make_model(2, 1)), 2.0 / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(critical_m(make_model(1, 1)), 1.0, 1e-12);
  // 1024 / (2 sqrt(1023)), high-precision reference value
  EXPECT_NEAR(critical_m(make_model(10, 1)), 16.007818226706494, 1e-12);
  EXPECT_THROW(critical_m(make_model(4, 0)), std::domain_error);
  EXPECT_THROW(critical_m(make_model(4, 16)), std::domain_error);
}

TEST(Analytic, CriticalMBelowRootNOverA) {
  for (const auto& model : sample_models()) {
    if (model.marked_count > model.domain_size / 2) continue;
    const double root = std::sqrt(static_cast<double>(model.domain_size) /
                                  static_cast<double>(model.marked_count));
    EXPECT_LT(critical_m(model), root);
  }
}
