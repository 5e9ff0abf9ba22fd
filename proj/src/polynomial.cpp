// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#include "pslet/polynomial.hpp"

#include <algorithm>

namespace pslet {

Polynomial::Polynomial(std::vector<Real> coefficients) : c_(std::move(coefficients)) {}

Real Polynomial::operator[](int power) const {
  if (power < 0 || power > degree()) return Real(0);
  return c_[static_cast<std::size_t>(power)];
}

void Polynomial::set(int power, const Real& value) {
  if (power > degree()) c_.resize(static_cast<std::size_t>(power) + 1, Real(0));
  c_[static_cast<std::size_t>(power)] = value;
}

void Polynomial::add(int power, const Real& value) {
  if (power > degree()) c_.resize(static_cast<std::size_t>(power) + 1, Real(0));
  c_[static_cast<std::size_t>(power)] += value;
}

std::vector<int> Polynomial::support() const {
  std::vector<int> powers;
  for (int i = 0; i <= degree(); ++i) {
    if (c_[static_cast<std::size_t>(i)] != 0) powers.push_back(i);
  }
  return powers;
}

Real Polynomial::evaluate(const Real& x) const {
  Real acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Real> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(c_[static_cast<std::size_t>(i)] * i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::integral() const {
  std::vector<Real> p(c_.size() + 1, Real(0));
  for (int i = 0; i <= degree(); ++i) {
    p[static_cast<std::size_t>(i) + 1] = c_[static_cast<std::size_t>(i)] / (i + 1);
  }
  return Polynomial(std::move(p));
}

Polynomial Polynomial::odd_part() const {
  Polynomial p = *this;
  for (int i = 0; i <= degree(); i += 2) p.c_[static_cast<std::size_t>(i)] = 0;
  return p;
}

Polynomial Polynomial::even_part() const {
  Polynomial p = *this;
  for (int i = 1; i <= degree(); i += 2) p.c_[static_cast<std::size_t>(i)] = 0;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Real> out(a.c_.size() + b.c_.size() - 1, Real(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Real> out(std::max(a.c_.size(), b.c_.size()), Real(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return Polynomial(std::move(out));
}

}  // namespace pslet
