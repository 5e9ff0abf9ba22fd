// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#include "pslet/errors.hpp"

namespace pslet {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::NonPositiveRadius: return "NonPositiveRadius";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::InvalidCharge: return "InvalidCharge";
    case ErrorCode::ImaginaryFrequency: return "ImaginaryFrequency";
    case ErrorCode::ZeroForce: return "ZeroForce";
    case ErrorCode::BoundStateNotFound: return "BoundStateNotFound";
    case ErrorCode::AmbiguousRoot: return "AmbiguousRoot";
    case ErrorCode::DerivativeUnavailable: return "DerivativeUnavailable";
    case ErrorCode::HierarchyBreakdown: return "HierarchyBreakdown";
    case ErrorCode::OrderUnsupported: return "OrderUnsupported";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::InsufficientCoefficients: return "InsufficientCoefficients";
    case ErrorCode::NoBoundState: return "NoBoundState";
    case ErrorCode::GridInsufficient: return "GridInsufficient";
  }
  return "Unknown";
}

}  // namespace pslet
