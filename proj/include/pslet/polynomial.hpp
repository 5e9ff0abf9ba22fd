// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pslet/precision.hpp"

#include <vector>

namespace pslet {

/// Dense polynomial in x; coefficient i multiplies x^i.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Real> coefficients);

  /// Highest stored power, -1 for the empty polynomial.
  [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<Real>& coefficients() const noexcept { return c_; }

  /// Coefficient of x^power; zero outside the stored range.
  [[nodiscard]] Real operator[](int power) const;
  void set(int power, const Real& value);
  void add(int power, const Real& value);

  /// Powers whose coefficient is not exactly zero.
  [[nodiscard]] std::vector<int> support() const;

  [[nodiscard]] Real evaluate(const Real& x) const;
  [[nodiscard]] Polynomial derivative() const;
  /// Antiderivative with zero constant term.
  [[nodiscard]] Polynomial integral() const;
  [[nodiscard]] Polynomial odd_part() const;
  [[nodiscard]] Polynomial even_part() const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);

 private:
  std::vector<Real> c_;
};

}  // namespace pslet
