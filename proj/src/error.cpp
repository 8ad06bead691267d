/*
 * Copyright 2026 The addesign Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "addesign/error.hpp"

namespace addesign {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotPrimitivePolynomial: return "NotPrimitivePolynomial";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::LogOfZero: return "LogOfZero";
    case ErrorCode::OrderDoesNotDivide: return "OrderDoesNotDivide";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorCode::InvalidBlock: return "InvalidBlock";
    case ErrorCode::UnequalBlockSizes: return "UnequalBlockSizes";
    case ErrorCode::NotTwoDesign: return "NotTwoDesign";
    case ErrorCode::EmptyDesign: return "EmptyDesign";
    case ErrorCode::NotDifferenceSet: return "NotDifferenceSet";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::DegenerateOrder: return "DegenerateOrder";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::NoZeroSigma: return "NoZeroSigma";
    case ErrorCode::NotSubspaceBlocks: return "NotSubspaceBlocks";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

bool is_usage_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::ParseError:
    case ErrorCode::FieldTooLarge:
    case ErrorCode::DimensionOutOfRange:
    case ErrorCode::InvalidBlock:
    case ErrorCode::GroupMismatch:
    case ErrorCode::SizeMismatch:
    case ErrorCode::TooLarge:
      return true;
    default:
      return false;
  }
}

}  // namespace addesign
