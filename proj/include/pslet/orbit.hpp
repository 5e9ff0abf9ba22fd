// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pslet/potential.hpp"

#include <optional>

namespace pslet {

enum class UnitMode { Dimensional, Scaled };

/// Bound-state query: quantum numbers plus the potential they live in.
struct QuantumProblem {
  int n_r = 0;
  int l = 0;
  PotentialModel potential = PotentialModel::coulomb(Real(1));
  UnitMode units = UnitMode::Scaled;

  /// -exp(-alpha' y)/y in scaled units.
  static QuantumProblem scaled(const Real& alpha_prime, int l, int n_r = 0);
  /// -Z exp(-alpha r)/r with alpha from the screening rule.
  static QuantumProblem dimensional(int charge, int l, int n_r = 0,
                                    const ScreeningRule& rule = {});
};

/// Leading-order (classical orbit) solution.
///
/// Invariants: lbar = l - beta > 0, q = lbar^2, w > 0, and e_m1 vanishes up to
/// rounding because beta is chosen to cancel it.
struct OrbitConfig {
  int n_r = 0;
  int l = 0;
  Real r0;
  Real w;
  Real beta;
  Real lbar;
  Real q;
  Real e_m2;
  Real e_m1;

  /// lbar^2 E^(-2), the classical energy.
  [[nodiscard]] Real leading_energy() const { return q * e_m2; }
};

struct OrbitOptions {
  double r_min = 1e-6;
  /// Upper end of the scan when the potential has no finite stable-orbit limit.
  double r_max = 1e6;
  int scan_points = 512;
};

/// w = sqrt(3 + r0 V''(r0) / V'(r0)).
/// Throws ZeroForce when V'(r0) = 0 and ImaginaryFrequency when the radicand
/// is not positive.
Real frequency_w(const PotentialModel& potential, const Real& r0);

/// F(r) = l + 1/2 + (n_r + 1/2) w(r) - sqrt(r^3 V'(r)); its root is r0.
Real orbit_residual(const QuantumProblem& problem, const Real& r);

/// E^(-2)(r) = 1/(2 r^2) + V(r)/q at fixed q.
Real classical_energy(const PotentialModel& potential, const Real& r, const Real& q);

/// Finds r0 by scanning F on a geometric grid, bisecting each sign change and
/// polishing with Newton, then fills in beta, lbar, q and the first two
/// energy coefficients. Among several roots the lowest E^(-2) minimum wins.
OrbitConfig solve_r0(const QuantumProblem& problem, const OrbitOptions& options = {});

}  // namespace pslet
