// Copyright 2026 The qlin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlin/error.hpp"

namespace qlin {

std::string_view errorCodeName(ErrorCode code) {
    switch (code) {
        case ErrorCode::WireOutOfRange: return "WireOutOfRange";
        case ErrorCode::ControlEqualsTarget: return "ControlEqualsTarget";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::DuplicateWire: return "DuplicateWire";
        case ErrorCode::ArityTooLarge: return "ArityTooLarge";
        case ErrorCode::UseAfterConsume: return "UseAfterConsume";
        case ErrorCode::DuplicateHandle: return "DuplicateHandle";
        case ErrorCode::DanglingQubits: return "DanglingQubits";
        case ErrorCode::ReentrantExecute: return "ReentrantExecute";
        case ErrorCode::CapacityExceeded: return "CapacityExceeded";
        case ErrorCode::ProgramConsumed: return "ProgramConsumed";
        case ErrorCode::AllIdentityTerm: return "AllIdentityTerm";
        case ErrorCode::ParamCountMismatch: return "ParamCountMismatch";
        case ErrorCode::RusIterationLimit: return "RusIterationLimit";
        case ErrorCode::InvalidGraph: return "InvalidGraph";
        case ErrorCode::InvalidHamiltonian: return "InvalidHamiltonian";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

QuantumError::QuantumError(ErrorCode code, const std::string &message)
    : std::runtime_error(message), code_(code) {}

ParseError::ParseError(std::size_t line, const std::string &reason, ErrorCode cause)
    : QuantumError(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + reason),
      line_(line),
      cause_(cause) {}

}  // namespace qlin
