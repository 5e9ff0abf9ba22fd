// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace pslet {

enum class ErrorCode {
  InvalidArgument = 1,
  InvalidConfig,
  NonPositiveRadius,
  OrderTooLarge,
  InvalidCharge,
  ImaginaryFrequency,
  ZeroForce,
  BoundStateNotFound,
  AmbiguousRoot,
  DerivativeUnavailable,
  HierarchyBreakdown,
  OrderUnsupported,
  GridTooCoarse,
  InsufficientCoefficients,
  NoBoundState,
  GridInsufficient,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pslet
