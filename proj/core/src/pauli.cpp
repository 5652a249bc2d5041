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

#include "qlin/pauli.hpp"

#include <algorithm>
#include <cmath>

#include "qlin/error.hpp"

namespace qlin {

PauliString PauliString::parse(std::string_view text) {
    std::vector<PauliOp> ops;
    ops.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
            case 'I': ops.push_back(PauliOp::I); break;
            case 'X': ops.push_back(PauliOp::X); break;
            case 'Y': ops.push_back(PauliOp::Y); break;
            case 'Z': ops.push_back(PauliOp::Z); break;
            default:
                throw QuantumError(ErrorCode::InvalidHamiltonian,
                                   "'" + std::string(1, ch) + "' is not one of I, X, Y, Z");
        }
    }
    return PauliString(std::move(ops));
}

bool PauliString::isIdentity() const {
    return std::all_of(ops_.begin(), ops_.end(), [](PauliOp op) { return op == PauliOp::I; });
}

std::optional<std::size_t> PauliString::firstNonIdentity() const {
    for (std::size_t k = 0; k < ops_.size(); ++k) {
        if (ops_[k] != PauliOp::I) {
            return k;
        }
    }
    return std::nullopt;
}

std::string PauliString::toString() const {
    std::string out;
    out.reserve(ops_.size());
    for (PauliOp op : ops_) {
        out.push_back(static_cast<char>(op));
    }
    return out;
}

Hamiltonian::Hamiltonian(std::vector<HamiltonianTerm> terms) : terms_(std::move(terms)), qubitCount_(0) {
    if (terms_.empty()) {
        throw QuantumError(ErrorCode::InvalidHamiltonian, "Hamiltonian has no terms");
    }
    qubitCount_ = terms_.front().term.size();
    if (qubitCount_ == 0) {
        throw QuantumError(ErrorCode::InvalidHamiltonian, "Pauli strings must act on at least one qubit");
    }
    for (const HamiltonianTerm &t : terms_) {
        if (t.term.size() != qubitCount_) {
            throw QuantumError(ErrorCode::InvalidHamiltonian, "term " + t.term.toString() + " has length " +
                                                                  std::to_string(t.term.size()) + ", expected " +
                                                                  std::to_string(qubitCount_));
        }
        if (!std::isfinite(t.coefficient)) {
            throw QuantumError(ErrorCode::InvalidHamiltonian, "non-finite coefficient on " + t.term.toString());
        }
    }
}

}  // namespace qlin
