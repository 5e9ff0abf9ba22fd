// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#include "pslet/potential.hpp"

#include "pslet/errors.hpp"

#include <cmath>

namespace pslet {

namespace mp = boost::multiprecision;

PotentialModel PotentialModel::coulomb(const Real& charge) {
  if (!(charge > 0)) throw Error(ErrorCode::InvalidCharge, "charge must be positive");
  PotentialModel m;
  m.kind_ = PotentialKind::Coulomb;
  m.charge_ = charge;
  m.screening_ = Real(0);
  return m;
}

PotentialModel PotentialModel::yukawa(const Real& charge, const Real& screening) {
  if (!(charge > 0)) throw Error(ErrorCode::InvalidCharge, "charge must be positive");
  if (screening < 0) throw Error(ErrorCode::InvalidArgument, "screening must be non-negative");
  PotentialModel m;
  m.kind_ = PotentialKind::Yukawa;
  m.charge_ = charge;
  m.screening_ = screening;
  return m;
}

PotentialModel PotentialModel::custom(DerivativeFn derivative) {
  if (!derivative) throw Error(ErrorCode::InvalidArgument, "empty derivative provider");
  PotentialModel m;
  m.kind_ = PotentialKind::Custom;
  m.analytic_ = std::make_shared<const DerivativeFn>(std::move(derivative));
  return m;
}

PotentialModel PotentialModel::custom_from_values(ValueFn value) {
  if (!value) throw Error(ErrorCode::InvalidArgument, "empty value provider");
  PotentialModel m;
  m.kind_ = PotentialKind::Custom;
  m.value_only_ = std::make_shared<const ValueFn>(std::move(value));
  return m;
}

PotentialModel PotentialModel::with_max_order(int cap) const {
  if (cap < 4) throw Error(ErrorCode::InvalidArgument, "derivative cap must be at least 4");
  PotentialModel m = *this;
  m.max_order_ = cap;
  return m;
}

Real PotentialModel::derivative(const Real& r, int n) const {
  if (!(r > 0)) throw Error(ErrorCode::NonPositiveRadius, "radius must be positive");
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative derivative order");
  if (n > max_order_) {
    throw Error(ErrorCode::OrderTooLarge,
                "derivative order " + std::to_string(n) + " exceeds cap " +
                    std::to_string(max_order_));
  }

  switch (kind_) {
    case PotentialKind::Coulomb:
    case PotentialKind::Yukawa: {
      // Leibniz rule on (-Z e^{-alpha r}) * (1/r):
      //   sum_k binom(n,k) (-alpha)^k (-1)^(n-k) (n-k)! / r^(n-k+1)
      const Real inv_r = Real(1) / r;
      Real sum = 0;
      Real binom = 1;
      Real alpha_pow = 1;
      for (int k = 0; k <= n; ++k) {
        const int j = n - k;
        Real inv_term = mp::pow(inv_r, j + 1);
        Real fact = 1;
        for (int i = 2; i <= j; ++i) fact *= i;
        Real term = binom * alpha_pow * fact * inv_term;
        sum += (j % 2 == 0) ? term : -term;
        if (k < n) {
          binom = binom * (n - k) / (k + 1);
          alpha_pow *= -screening_;
        }
      }
      const Real envelope = (kind_ == PotentialKind::Coulomb || screening_ == 0)
                                ? Real(1)
                                : Real(mp::exp(-screening_ * r));
      return -charge_ * envelope * sum;
    }
    case PotentialKind::Custom:
      if (analytic_) return (*analytic_)(r, n);
      return finite_difference(r, n);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown potential kind");
}

Real PotentialModel::finite_difference(const Real& r, int n) const {
  const ValueFn& f = *value_only_;
  if (n == 0) return f(r);
  // Central stencil of width n with O(h^2) truncation; the step balances
  // truncation against cancellation at the working precision.
  const int digits = static_cast<int>(working_digits());
  Real h = r * mp::pow(Real(10), Real(-digits) / (n + 2));
  const Real limit = r / n;
  if (h > limit) h = limit;
  Real sum = 0;
  Real binom = 1;
  for (int k = 0; k <= n; ++k) {
    Real x = r + (Real(n) / 2 - k) * h;
    Real term = binom * f(x);
    sum += (k % 2 == 0) ? term : -term;
    binom = binom * (n - k) / (k + 1);
  }
  return sum / mp::pow(h, n);
}

double PotentialModel::value(double r) const {
  switch (kind_) {
    case PotentialKind::Coulomb:
      return -to_double(charge_) / r;
    case PotentialKind::Yukawa:
      return -to_double(charge_) * std::exp(-to_double(screening_) * r) / r;
    case PotentialKind::Custom:
      return to_double(derivative(Real(r), 0));
  }
  return 0;
}

std::optional<Real> PotentialModel::stable_orbit_limit() const {
  if (kind_ == PotentialKind::Yukawa && screening_ > 0) {
    return (1 + mp::sqrt(Real(5))) / (2 * screening_);
  }
  return std::nullopt;
}

Real potential_derivative(const PotentialModel& model, const Real& r, int n) {
  return model.derivative(r, n);
}

Real screening_alpha(const ScreeningRule& rule, int charge) {
  if (charge < 1) throw Error(ErrorCode::InvalidCharge, "charge must be an integer >= 1");
  const Real z(charge);
  const Real one_third = Real(1) / 3;
  Real alpha = decimal(rule.alpha0) * mp::pow(z, one_third) *
               mp::pow(1 - 1 / z, 2 * one_third);
  if (rule.mode == ScreeningMode::Scaled) alpha /= z;
  return alpha;
}

Real screening_alpha(const ScreeningRule& rule, double charge) {
  if (!std::isfinite(charge) || charge < 1 || std::floor(charge) != charge) {
    throw Error(ErrorCode::InvalidCharge, "charge must be an integer >= 1");
  }
  return screening_alpha(rule, static_cast<int>(charge));
}

}  // namespace pslet
