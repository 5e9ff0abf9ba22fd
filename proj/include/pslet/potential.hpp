// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pslet/precision.hpp"

#include <functional>
#include <memory>
#include <optional>

namespace pslet {

enum class PotentialKind { Coulomb, Yukawa, Custom };

/// n-th radial derivative of a user potential, n = 0 being the value.
using DerivativeFn = std::function<Real(const Real& r, int order)>;
using ValueFn = std::function<Real(const Real& r)>;

inline constexpr int kDefaultDerivativeCap = 24;

/// Attractive radial potential V(r) with derivatives of arbitrary order.
///
/// Yukawa is -Z exp(-alpha r)/r; alpha = 0 is Coulomb. Custom potentials carry
/// either analytic derivatives or a value-only function, in which case
/// derivatives come from central finite differences and the model reports
/// reduced_precision().
///
/// Instances are immutable and safe to share across threads.
class PotentialModel {
 public:
  static PotentialModel coulomb(const Real& charge);
  static PotentialModel yukawa(const Real& charge, const Real& screening);
  static PotentialModel custom(DerivativeFn derivative);
  static PotentialModel custom_from_values(ValueFn value);

  [[nodiscard]] PotentialKind kind() const noexcept { return kind_; }
  [[nodiscard]] const Real& charge() const noexcept { return charge_; }
  [[nodiscard]] const Real& screening() const noexcept { return screening_; }
  [[nodiscard]] int max_order() const noexcept { return max_order_; }
  [[nodiscard]] bool reduced_precision() const noexcept { return value_only_ != nullptr; }

  [[nodiscard]] PotentialModel with_max_order(int cap) const;

  /// d^n V / dr^n at r. Throws NonPositiveRadius or OrderTooLarge.
  [[nodiscard]] Real derivative(const Real& r, int n) const;

  /// Double-precision V(r), used by the grid solver.
  [[nodiscard]] double value(double r) const;

  /// Largest radius with a stable circular orbit, when finite.
  /// For Yukawa this is (1 + sqrt 5) / (2 alpha).
  [[nodiscard]] std::optional<Real> stable_orbit_limit() const;

 private:
  PotentialModel() = default;

  [[nodiscard]] Real finite_difference(const Real& r, int n) const;

  PotentialKind kind_ = PotentialKind::Coulomb;
  Real charge_{1};
  Real screening_{0};
  int max_order_ = kDefaultDerivativeCap;
  std::shared_ptr<const DerivativeFn> analytic_;
  std::shared_ptr<const ValueFn> value_only_;
};

/// Free-function form of PotentialModel::derivative.
Real potential_derivative(const PotentialModel& model, const Real& r, int n);

enum class ScreeningMode { Dimensional, Scaled };

/// Z-dependent screening alpha = alpha0 Z^(1/3) (1 - 1/Z)^(2/3); the scaled
/// form divides by Z.
struct ScreeningRule {
  double alpha0 = 0.98;
  ScreeningMode mode = ScreeningMode::Dimensional;
};

Real screening_alpha(const ScreeningRule& rule, int charge);

/// Accepts a floating charge and rejects non-integers with InvalidCharge.
Real screening_alpha(const ScreeningRule& rule, double charge);

}  // namespace pslet
