// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pslet/orbit.hpp"
#include "pslet/polynomial.hpp"

#include <span>
#include <vector>

namespace pslet {

inline constexpr int kDefaultSeriesTerms = 10;

/// Expansion variable eps = lbar^(-1/2). A series of `terms` energy
/// coefficients E^(-2) .. E^(terms-3) needs polynomial index 2 (terms - 2).
constexpr int polynomial_index_for_terms(int terms) { return 2 * (terms - 2); }

/// Perturbation polynomials v^(k)(x) of the shifted-centrifugal expansion,
/// one per power eps^k, k = 0 .. max_index.
struct PerturbationPolynomials {
  std::vector<Polynomial> terms;

  [[nodiscard]] int max_index() const { return static_cast<int>(terms.size()) - 1; }
  [[nodiscard]] const Polynomial& operator[](int k) const {
    return terms[static_cast<std::size_t>(k)];
  }
  /// x^3 coefficient of v^(1).
  [[nodiscard]] Real b1() const { return terms.at(1)[3]; }
  /// x^4 coefficient of v^(2).
  [[nodiscard]] Real b2() const { return terms.at(2)[4]; }
};

/// Solution of the Riccati hierarchy for the nodeless state.
///
/// `flux[k]` is the eps^k coefficient of U'(x). Its odd part is U^(k) and its
/// even part is G^(k-1), so
///   U'(x) = sum_n U^(n) eps^n + sum_n G^(n) eps^(n+1).
/// `balance[k]` is the x^0 right-hand side found at eps^k: zero for odd k,
/// beta(beta+1)/2 + lambda^(0) at k = 2 and lambda^(k/2-1) for even k > 2.
struct RiccatiSolution {
  std::vector<Polynomial> flux;
  std::vector<Real> balance;
  std::vector<Real> lambda;

  [[nodiscard]] int max_index() const { return static_cast<int>(flux.size()) - 1; }

  [[nodiscard]] Polynomial u(int n) const;
  [[nodiscard]] Polynomial g(int n) const;
  /// Coefficient of x^(2m-1) in U^(n).
  [[nodiscard]] Real d(int m, int n) const;
  /// Coefficient of x^(2m) in G^(n).
  [[nodiscard]] Real c(int m, int n) const;
};

struct EnergySeries {
  /// E^(n) stored at index n + 2.
  std::vector<Real> coefficients;
  Real lbar;
  /// Sum of every coefficient weighted by lbar^(-n).
  Real partial_sum;
  OrbitConfig orbit;
  bool reduced_precision = false;

  [[nodiscard]] int terms() const { return static_cast<int>(coefficients.size()); }
  [[nodiscard]] const Real& coefficient(int n) const {
    return coefficients.at(static_cast<std::size_t>(n + 2));
  }
  /// Sum of the first `count` terms E^(-2) lbar^2 + ... .
  [[nodiscard]] Real partial_sum_of(int count) const;
  /// |E^(n) lbar^(-n)| for each stored term, for judging truncation.
  [[nodiscard]] std::vector<Real> term_magnitudes() const;
};

/// lbar^2 * sum_{k < count} c_k lambda^k with lambda = 1/lbar.
Real evaluate_scaled_series(std::span<const Real> c, int count, const Real& lbar);

PerturbationPolynomials build_perturbation_polynomials(const OrbitConfig& config,
                                                       const PotentialModel& potential,
                                                       int max_index);

RiccatiSolution solve_riccati_hierarchy(const PerturbationPolynomials& polys,
                                        const OrbitConfig& config, int max_index);

EnergySeries assemble_energy_series(const RiccatiSolution& riccati,
                                    const OrbitConfig& config, int terms);

struct WavefunctionOptions {
  /// Highest eps power of U' to integrate; negative means all available.
  int max_index = -1;
  bool normalize = false;
};

/// psi(r) = exp(U(x(r))) with x = lbar^(1/2) (r - r0)/r0, U integrated term
/// by term from the Riccati flux. Values are unnormalized unless requested;
/// normalization uses the trapezoidal rule on the supplied grid.
std::vector<double> reconstruct_wavefunction(const RiccatiSolution& riccati,
                                             const OrbitConfig& config,
                                             std::span<const double> radii,
                                             const WavefunctionOptions& options = {});

}  // namespace pslet
