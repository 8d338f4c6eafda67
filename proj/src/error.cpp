// Copyright 2026 The codedcache Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "codedcache/error.hpp"

namespace codedcache {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidDomain: return "InvalidDomain";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::RingNotSupported: return "RingNotSupported";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::BaseNotCcp: return "BaseNotCcp";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ModuliNotCoprimePrimes: return "ModuliNotCoprimePrimes";
    case ErrorCode::ComponentInvalid: return "ComponentInvalid";
    case ErrorCode::RingConditionViolated: return "RingConditionViolated";
    case ErrorCode::IncompleteDemands: return "IncompleteDemands";
    case ErrorCode::DecodeFailure: return "DecodeFailure";
    case ErrorCode::Lemma4Violated: return "Lemma4Violated";
    case ErrorCode::NoFeasibleK: return "NoFeasibleK";
    case ErrorCode::NonIntegralCachePoint: return "NonIntegralCachePoint";
    case ErrorCode::NoSolutionInRange: return "NoSolutionInRange";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace codedcache
