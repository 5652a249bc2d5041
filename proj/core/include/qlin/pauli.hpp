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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qlin {

enum class PauliOp : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

/// Tensor product of single-qubit Pauli operators; op k acts on wire k.
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(std::vector<PauliOp> ops) : ops_(std::move(ops)) {}

    /// Parses e.g. "XZI". Throws InvalidHamiltonian on any other character.
    static PauliString parse(std::string_view text);

    std::size_t size() const noexcept { return ops_.size(); }
    std::span<const PauliOp> ops() const noexcept { return ops_; }
    PauliOp operator[](std::size_t k) const { return ops_[k]; }

    bool isIdentity() const;
    std::optional<std::size_t> firstNonIdentity() const;
    std::string toString() const;

    bool operator==(const PauliString &) const = default;

  private:
    std::vector<PauliOp> ops_;
};

struct HamiltonianTerm {
    double coefficient;
    PauliString term;
};

/// H = sum_i coefficient_i * term_i over a fixed number of qubits.
class Hamiltonian {
  public:
    /// Throws InvalidHamiltonian if empty, if string lengths differ, or if a coefficient is not finite.
    explicit Hamiltonian(std::vector<HamiltonianTerm> terms);

    std::size_t qubitCount() const noexcept { return qubitCount_; }
    std::span<const HamiltonianTerm> terms() const noexcept { return terms_; }

  private:
    std::vector<HamiltonianTerm> terms_;
    std::size_t qubitCount_;
};

}  // namespace qlin
