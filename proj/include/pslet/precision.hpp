// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <mutex>
#include <string>

namespace pslet {

/// Extended-precision scalar used by every series computation.
///
/// The working precision is taken from the default precision in force when a
/// value is created; use PrecisionScope to set it for a block of work.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultDigits = 50;
inline constexpr unsigned kMinDigits = 20;

/// Sets the extended-precision working digits for the lifetime of the scope.
///
/// The underlying default precision is process-wide, so scopes are serialized
/// through a recursive mutex. Nested scopes on the same thread are allowed and
/// restore the outer precision on exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();

  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  [[nodiscard]] unsigned digits() const noexcept { return digits_; }

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned previous_;
  unsigned digits_;
};

/// Digits currently in force for newly created Real values.
unsigned working_digits();

/// Converts a double through its shortest round-trip decimal form, so 0.1
/// becomes the decimal one tenth at full working precision.
Real decimal(double value);

/// Parses a decimal literal at the working precision.
Real decimal(const std::string& literal);

inline double to_double(const Real& x) { return x.convert_to<double>(); }

/// Scientific-notation string with the requested significant digits.
std::string to_string(const Real& x, int significant_digits);

/// 10^-exponent at working precision.
Real pow10_neg(int exponent);

}  // namespace pslet
