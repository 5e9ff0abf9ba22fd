// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pslet/pade.hpp"

#include <optional>

namespace pslet {

/// Plain-value description of a query, converted to extended precision
/// inside the solve.
struct ProblemSpec {
  UnitMode units = UnitMode::Scaled;
  int charge = 1;
  /// Scaled screening; ignored in dimensional mode.
  double alpha_prime = 0.0;
  int l = 0;
  int n_r = 0;
  ScreeningRule rule{};
  /// Replaces the Yukawa family when set.
  std::optional<PotentialModel> custom;
};

struct SolveOptions {
  int terms = kDefaultSeriesTerms;
  unsigned digits = kDefaultDigits;
  PadeIndex pade{4, 4};
  int derivative_cap = kDefaultDerivativeCap;
};

/// Agreement below this many digits marks a result as low confidence.
inline constexpr int kLowConfidenceDigits = 2;

struct Solution {
  QuantumProblem problem;
  OrbitConfig orbit;
  PerturbationPolynomials polynomials;
  RiccatiSolution riccati;
  EnergySeries series;
  std::optional<PadeEstimate> pade;
  std::optional<StabilityReport> stability;
  unsigned digits = kDefaultDigits;

  /// Selected Pade value when available, otherwise the partial sum.
  [[nodiscard]] Real best_energy() const;
  [[nodiscard]] bool low_confidence() const;
};

/// Throws InvalidConfig for inconsistent options (precision below 30 digits
/// with more than six terms, or a series beyond the derivative cap).
void validate(const SolveOptions& options);

QuantumProblem make_problem(const ProblemSpec& spec);

/// Orbit, hierarchy, series and Pade table in one pass at the requested
/// precision. For n_r > 0 only the first two coefficients are produced.
Solution solve(const ProblemSpec& spec, const SolveOptions& options = {});

}  // namespace pslet
