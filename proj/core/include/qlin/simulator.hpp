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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "qlin/circuit.hpp"
#include "qlin/device.hpp"
#include "qlin/random.hpp"

namespace qlin {

using Amplitude = std::complex<double>;

/**
 * Dense state vector over n wires plus a registry mapping qubit ids to wires.
 *
 * Wire 0 is the most significant bit of an amplitude index. New qubits are
 * appended as the least significant wires; measured wires are contracted out
 * and the wires above them shift down.
 */
class QuantumState {
  public:
    QuantumState();

    std::size_t qubitCount() const noexcept { return wireIds_.size(); }
    std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
    double norm() const;

    /// Tensors on `count` fresh |0> wires and returns their ids.
    std::vector<QubitId> extendWithZeros(std::size_t count);

    /// Applies a gate whose wire fields are state wire positions. O(2^n), in place.
    void applyGate(const GateApp &gate);

    /// Born-rule measurement of one qubit: outcome is 1 iff u < P(1), u in [0, 1).
    bool measureWire(QubitId id, double u);
    bool measureWire(QubitId id, RandomSource &random) { return measureWire(id, random.uniform()); }

    std::size_t wireOf(QubitId id) const;
    bool contains(QubitId id) const { return idToWire_.contains(id); }

    /// Debug dump: JSON array of [re, im] pairs.
    std::string toJson() const;

  private:
    std::vector<Amplitude> amplitudes_;
    std::vector<QubitId> wireIds_;
    std::unordered_map<QubitId, std::size_t> idToWire_;
    QubitId nextId_ = 0;
};

/// Exact state-vector backend.
class SimulatorBackend final : public DeviceBackend {
  public:
    static constexpr std::size_t kDefaultCapacity = 24;

    explicit SimulatorBackend(std::uint64_t seed, std::size_t capacity = kDefaultCapacity);

    std::string name() const override { return "sim"; }
    void reset() override;
    std::vector<QubitId> allocate(std::size_t count) override;
    void applyGate(const GateApp &gate, std::span<const QubitId> qubits) override;
    bool measure(QubitId qubit) override;
    std::size_t liveQubits() const override { return state_.qubitCount(); }

    const QuantumState &state() const noexcept { return state_; }
    std::size_t capacity() const noexcept { return capacity_; }

  private:
    QuantumState state_;
    RandomSource random_;
    std::size_t capacity_;
};

}  // namespace qlin
