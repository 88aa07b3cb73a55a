// Copyright 2026 The effecta Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace effecta {

enum class ErrorKind {
    MalformedTable,
    AxiomViolation,
    NonUniqueSupplement,
    OrderNotAntisymmetric,
    NonUniqueDifference,
    BooleanStructureFailure,
    SizeLimitExceeded,
    EmptyStateSpace,
    RdpRequired,
    NonSeparatingStates,
    NotATribe,
    InvalidRepresentation,
    PreconditionFailed,
    SumUndefined,
    SumNotOne,
    NotMeasurable,
    NotAKernel,
    SpectralObstruction,
    NotSharp,
    PhiNotMonotone,
    PhiEndpointViolation,
    SupportNotCovered,
    NotAStateOnSharp,
    InfeasibleExtension,
    TheoremViolation,
    ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::NonUniqueSupplement: return "NonUniqueSupplement";
    case ErrorKind::OrderNotAntisymmetric: return "OrderNotAntisymmetric";
    case ErrorKind::NonUniqueDifference: return "NonUniqueDifference";
    case ErrorKind::BooleanStructureFailure: return "BooleanStructureFailure";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::EmptyStateSpace: return "EmptyStateSpace";
    case ErrorKind::RdpRequired: return "RdpRequired";
    case ErrorKind::NonSeparatingStates: return "NonSeparatingStates";
    case ErrorKind::NotATribe: return "NotATribe";
    case ErrorKind::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::SumUndefined: return "SumUndefined";
    case ErrorKind::SumNotOne: return "SumNotOne";
    case ErrorKind::NotMeasurable: return "NotMeasurable";
    case ErrorKind::NotAKernel: return "NotAKernel";
    case ErrorKind::SpectralObstruction: return "SpectralObstruction";
    case ErrorKind::NotSharp: return "NotSharp";
    case ErrorKind::PhiNotMonotone: return "PhiNotMonotone";
    case ErrorKind::PhiEndpointViolation: return "PhiEndpointViolation";
    case ErrorKind::SupportNotCovered: return "SupportNotCovered";
    case ErrorKind::NotAStateOnSharp: return "NotAStateOnSharp";
    case ErrorKind::InfeasibleExtension: return "InfeasibleExtension";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library. `witnesses` holds element, function
/// or carrier indices that reproduce the failure, in the order the message
/// names them.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message,
          std::vector<std::size_t> witnesses = {})
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind), witnesses_(std::move(witnesses)) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::vector<std::size_t> &witnesses() const noexcept {
        return witnesses_;
    }

  private:
    ErrorKind kind_;
    std::vector<std::size_t> witnesses_;
};

} // namespace effecta
