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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace addesign {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  // gf
  NotPrime,
  NotPrimitivePolynomial,
  DivisionByZero,
  FieldMismatch,
  LogOfZero,
  OrderDoesNotDivide,
  NotCoprime,
  FieldTooLarge,
  // geometry
  DimensionOutOfRange,
  // designs
  InvalidBlock,
  UnequalBlockSizes,
  NotTwoDesign,
  EmptyDesign,
  NotDifferenceSet,
  BadModulus,
  NotCyclic,
  // additivity
  GroupMismatch,
  NotSymmetric,
  DegenerateOrder,
  BadPrime,
  NoZeroSigma,
  NotSubspaceBlocks,
  SizeMismatch,
  TooLarge,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Usage-level errors (bad input, size limits) as opposed to failed
/// mathematical preconditions. The CLI maps the former to exit status 2.
bool is_usage_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace addesign
