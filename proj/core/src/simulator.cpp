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

#include "qlin/simulator.hpp"

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "qlin/error.hpp"

namespace qlin {

QuantumState::QuantumState() : amplitudes_{Amplitude{1.0, 0.0}} {}

double QuantumState::norm() const {
    double total = 0.0;
    for (const Amplitude &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

std::vector<QubitId> QuantumState::extendWithZeros(std::size_t count) {
    std::vector<QubitId> ids;
    if (count == 0) {
        return ids;
    }
    const std::size_t factor = std::size_t{1} << count;
    std::vector<Amplitude> grown(amplitudes_.size() * factor, Amplitude{});
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        grown[i * factor] = amplitudes_[i];
    }
    amplitudes_ = std::move(grown);
    for (std::size_t k = 0; k < count; ++k) {
        const QubitId id = nextId_++;
        idToWire_.emplace(id, wireIds_.size());
        wireIds_.push_back(id);
        ids.push_back(id);
    }
    return ids;
}

void QuantumState::applyGate(const GateApp &gate) {
    const std::size_t n = qubitCount();
    const std::size_t dim = amplitudes_.size();
    auto bitOf = [n](std::size_t wire) { return std::size_t{1} << (n - 1 - wire); };

    if (const auto *h = std::get_if<Hadamard>(&gate)) {
        const std::size_t bit = bitOf(h->wire);
        const double s = 1.0 / std::numbers::sqrt2;
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & bit) != 0) {
                continue;
            }
            const Amplitude a0 = amplitudes_[i];
            const Amplitude a1 = amplitudes_[i | bit];
            amplitudes_[i] = s * (a0 + a1);
            amplitudes_[i | bit] = s * (a0 - a1);
        }
    } else if (const auto *p = std::get_if<Phase>(&gate)) {
        const std::size_t bit = bitOf(p->wire);
        const Amplitude phase = std::polar(1.0, p->angle);
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & bit) != 0) {
                amplitudes_[i] *= phase;
            }
        }
    } else {
        const auto &cx = std::get<ControlledNot>(gate);
        const std::size_t cbit = bitOf(cx.control);
        const std::size_t tbit = bitOf(cx.target);
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & cbit) != 0 && (i & tbit) == 0) {
                std::swap(amplitudes_[i], amplitudes_[i | tbit]);
            }
        }
    }
}

std::size_t QuantumState::wireOf(QubitId id) const {
    auto it = idToWire_.find(id);
    if (it == idToWire_.end()) {
        throw QuantumError(ErrorCode::UseAfterConsume, "qubit " + std::to_string(id) + " is not live");
    }
    return it->second;
}

bool QuantumState::measureWire(QubitId id, double u) {
    const std::size_t n = qubitCount();
    const std::size_t wire = wireOf(id);
    const std::size_t shift = n - 1 - wire;
    const std::size_t bit = std::size_t{1} << shift;

    double p1 = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & bit) != 0) {
            p1 += std::norm(amplitudes_[i]);
        }
    }
    const bool outcome = u < p1;
    const double kept = outcome ? p1 : 1.0 - p1;
    const double scale = kept > 0.0 ? 1.0 / std::sqrt(kept) : 0.0;

    // Drop the measured bit from every index: high bits shift down over it.
    const std::size_t lowMask = bit - 1;
    std::vector<Amplitude> reduced(amplitudes_.size() / 2);
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if (((i & bit) != 0) != outcome) {
            continue;
        }
        const std::size_t j = ((i >> (shift + 1)) << shift) | (i & lowMask);
        reduced[j] = amplitudes_[i] * scale;
    }
    amplitudes_ = std::move(reduced);

    wireIds_.erase(wireIds_.begin() + static_cast<std::ptrdiff_t>(wire));
    idToWire_.erase(id);
    for (std::size_t w = wire; w < wireIds_.size(); ++w) {
        idToWire_[wireIds_[w]] = w;
    }
    return outcome;
}

std::string QuantumState::toJson() const {
    nlohmann::json out = nlohmann::json::array();
    for (const Amplitude &a : amplitudes_) {
        out.push_back({a.real(), a.imag()});
    }
    return out.dump();
}

SimulatorBackend::SimulatorBackend(std::uint64_t seed, std::size_t capacity)
    : random_(seed), capacity_(capacity) {}

void SimulatorBackend::reset() { state_ = QuantumState(); }

std::vector<QubitId> SimulatorBackend::allocate(std::size_t count) {
    if (state_.qubitCount() + count > capacity_) {
        throw QuantumError(ErrorCode::CapacityExceeded, "simulator capacity is " + std::to_string(capacity_) +
                                                            " qubits, requested " +
                                                            std::to_string(state_.qubitCount() + count));
    }
    return state_.extendWithZeros(count);
}

void SimulatorBackend::applyGate(const GateApp &gate, std::span<const QubitId> qubits) {
    if (const auto *h = std::get_if<Hadamard>(&gate)) {
        state_.applyGate(Hadamard{state_.wireOf(qubits[h->wire])});
    } else if (const auto *p = std::get_if<Phase>(&gate)) {
        state_.applyGate(Phase{p->angle, state_.wireOf(qubits[p->wire])});
    } else {
        const auto &cx = std::get<ControlledNot>(gate);
        state_.applyGate(ControlledNot{state_.wireOf(qubits[cx.control]), state_.wireOf(qubits[cx.target])});
    }
}

bool SimulatorBackend::measure(QubitId qubit) { return state_.measureWire(qubit, random_); }

}  // namespace qlin
