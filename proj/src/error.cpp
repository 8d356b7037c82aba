// Copyright 2026 The cvtangle Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvtangle/error.hpp"

namespace cvtangle {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnsupportedCut: return "UnsupportedCut";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::NotSymmetricState: return "NotSymmetricState";
    case ErrorCode::Unphysical: return "Unphysical";
    case ErrorCode::RegionViolation: return "RegionViolation";
    case ErrorCode::TriangleViolation: return "TriangleViolation";
    case ErrorCode::NonPositiveDeterminant: return "NonPositiveDeterminant";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::OptimizerFailure: return "OptimizerFailure";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace cvtangle
