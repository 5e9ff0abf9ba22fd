// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#include "pslet/precision.hpp"

#include "pslet/errors.hpp"

#include <array>
#include <charconv>
#include <iomanip>
#include <sstream>

namespace pslet {

namespace {

std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}

}  // namespace

PrecisionScope::PrecisionScope(unsigned digits)
    : lock_(precision_mutex()), previous_(Real::default_precision()), digits_(digits) {
  if (digits < kMinDigits) {
    throw Error(ErrorCode::InvalidConfig,
                "extended precision needs at least " + std::to_string(kMinDigits) + " digits");
  }
  Real::default_precision(digits);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(previous_); }

unsigned working_digits() { return Real::default_precision(); }

Real decimal(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) {
    throw Error(ErrorCode::InvalidArgument, "cannot format value");
  }
  return Real(std::string(buf.data(), end));
}

Real decimal(const std::string& literal) { return Real(literal); }

std::string to_string(const Real& x, int significant_digits) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(significant_digits - 1) << x;
  return os.str();
}

Real pow10_neg(int exponent) {
  using boost::multiprecision::pow;
  return pow(Real(10), Real(-exponent));
}

}  // namespace pslet
