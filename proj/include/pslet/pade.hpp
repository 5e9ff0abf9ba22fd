// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pslet/series.hpp"

#include <optional>
#include <span>
#include <vector>

namespace pslet {

struct PadeIndex {
  int n = 4;
  int m = 4;
  friend bool operator==(const PadeIndex&, const PadeIndex&) = default;
};

/// Condition number above which the denominator system is flagged.
inline constexpr double kPadeConditionLimit = 1e30;

struct PadeEntry {
  PadeIndex index;
  Real value;
  /// Ill-conditioned or inconsistent denominator system.
  bool degenerate = false;
  /// Singular but consistent system (the series is already rational of
  /// lower order); free denominator coefficients were set to zero.
  bool reduced_rank = false;
  double condition = 1.0;
};

/// [n/m] rational approximant of sum c_k x^k evaluated at x, with the
/// denominator's constant term fixed to 1.
PadeEntry pade_approximant(std::span<const Real> c, PadeIndex index, const Real& x);

/// Table of [N,M] approximants of an energy series in lambda = 1/lbar.
///
/// The series is factored as E = lbar^2 sum_k E^(k-2) lambda^k, keeping the
/// zero E^(-1) coefficient. `best` is the selected entry and `uncertainty`
/// is |[n,m+1] - [n,m]|, or |[n,m] - [n-1,m]| when [n,m+1] is out of reach.
struct PadeEstimate {
  std::vector<PadeEntry> entries;
  PadeIndex selected;
  Real best;
  std::optional<Real> refinement;
  Real uncertainty;

  [[nodiscard]] const PadeEntry* find(PadeIndex index) const;
  [[nodiscard]] std::optional<Real> value(PadeIndex index) const;
};

PadeEstimate pade_table(const EnergySeries& series, int max_n, int max_m,
                        PadeIndex selected = {});

struct StabilityReport {
  Real best;
  Real uncertainty;
  /// Leading significant digits shared by the near-diagonal staircase
  /// [2,2], [2,3], ..., [n,m], [n,m+1], less one per degenerate entry.
  int agreement_digits = 0;
};

StabilityReport stability_report(const PadeEstimate& estimate);

}  // namespace pslet
