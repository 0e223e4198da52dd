// Copyright 2026 The chkit Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chkit/error.hpp"

namespace chkit {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroRay: return "ZeroRay";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::SumNotIdentity: return "SumNotIdentity";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::NotAProjector: return "NotAProjector";
    case ErrorCode::ZeroCell: return "ZeroCell";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::OracleTooLarge: return "OracleTooLarge";
    case ErrorCode::ZeroProbabilityCondition: return "ZeroProbabilityCondition";
    case ErrorCode::InvalidProbability: return "InvalidProbability";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::Incompatible: return "Incompatible";
    case ErrorCode::NotARefinement: return "NotARefinement";
    case ErrorCode::NotInFramework: return "NotInFramework";
    case ErrorCode::AmbiguousRefinement: return "AmbiguousRefinement";
    case ErrorCode::NoAssertedTruth: return "NoAssertedTruth";
    case ErrorCode::InconsistentFamily: return "InconsistentFamily";
    case ErrorCode::ContextNotABasis: return "ContextNotABasis";
    case ErrorCode::DuplicateRayConflict: return "DuplicateRayConflict";
    case ErrorCode::UnknownDataset: return "UnknownDataset";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownDemo: return "UnknownDemo";
    }
    return "Unknown";
}

} // namespace chkit
