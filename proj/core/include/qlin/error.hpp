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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlin {

/// Machine-readable classification of every failure the library raises.
enum class ErrorCode {
    // Circuit construction.
    WireOutOfRange,
    ControlEqualsTarget,
    ArityMismatch,
    DuplicateWire,
    ArityTooLarge,
    // Device / linearity discipline.
    UseAfterConsume,
    DuplicateHandle,
    DanglingQubits,
    ReentrantExecute,
    CapacityExceeded,
    ProgramConsumed,
    // Algorithms.
    AllIdentityTerm,
    ParamCountMismatch,
    RusIterationLimit,
    InvalidGraph,
    InvalidHamiltonian,
    InvalidArgument,
    // Text formats.
    ParseError,
};

std::string_view errorCodeName(ErrorCode code);

class QuantumError : public std::runtime_error {
  public:
    QuantumError(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

/// A QuantumError that additionally records the 1-based source line it refers to.
class ParseError : public QuantumError {
  public:
    ParseError(std::size_t line, const std::string &reason, ErrorCode cause = ErrorCode::ParseError);

    std::size_t line() const noexcept { return line_; }
    /// The underlying failure (ParseError itself, or e.g. ControlEqualsTarget for a bad gate).
    ErrorCode cause() const noexcept { return cause_; }

  private:
    std::size_t line_;
    ErrorCode cause_;
};

}  // namespace qlin
