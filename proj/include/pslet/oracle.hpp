// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pslet/potential.hpp"

#include <vector>

namespace pslet {

enum class GridSpacing { Uniform, Log };

struct RadialGrid {
  double r_min = 1e-5;
  double r_max = 40.0;
  int points = 20000;
  GridSpacing spacing = GridSpacing::Log;

  /// Log grid on [1e-5, max(40, 30/sqrt(2|E|))] with 20000 points.
  static RadialGrid default_for(double energy_guess);

  [[nodiscard]] std::vector<double> radii() const;
};

inline constexpr int kMinOraclePoints = 1000;

struct OracleResult {
  double eigenvalue = 0.0;
  int nodes = 0;
  std::vector<double> radii;
  /// Reduced radial function u(r), normalized to unit L2 norm.
  std::vector<double> wavefunction;
  /// Relative log-derivative mismatch at the matching point.
  double mismatch = 0.0;
  int iterations = 0;
  /// <T> including the centrifugal term, E - <V>.
  double kinetic = 0.0;
  /// WKB estimate of |u(r_max)| / |u(turning point)|.
  double tail_decay = 0.0;
};

/// Direct Numerov shooting solution of the radial equation
///   -u''/2 + [l(l+1)/(2 r^2) + V(r)] u = E u,  u(r_min) ~ r^(l+1), u(r_max) = 0.
///
/// Energies are bracketed by node counting and bisected to 1e-12, then polished
/// by Ridders' method on the log-derivative mismatch at the outer turning point.
/// All arithmetic is in double precision.
OracleResult oracle_eigenvalue(const PotentialModel& potential, int l, int n_r,
                               const RadialGrid& grid);

}  // namespace pslet
