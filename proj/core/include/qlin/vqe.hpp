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

/**
 * @file
 * Variational eigensolver by Hamiltonian averaging.
 *
 * Each Pauli term P is estimated separately: the encoding circuit rotates
 * every non-identity wire into the Z basis and folds their parities onto the
 * first non-identity wire, so that measuring that wire gives
 * <psi|P|psi> = p0 - p1.
 */

#pragma once

#include <span>
#include <vector>

#include "qlin/circuit.hpp"
#include "qlin/device.hpp"
#include "qlin/optimiser.hpp"
#include "qlin/pauli.hpp"

namespace qlin {

/// Throws AllIdentityTerm for a term with no X, Y or Z.
Circuit encodingUnitary(const PauliString &term);

/// Estimates <psi|term|psi> for psi = ansatz|0...0> from nSamples executions.
double computeEnergyPauli(DeviceBackend &backend, const Circuit &ansatz, const PauliString &term,
                          std::size_t nSamples);

/// sum_i alpha_i <H_i>; identity terms contribute alpha_i without touching the device.
double computeEnergy(DeviceBackend &backend, const Circuit &ansatz, const Hamiltonian &hamiltonian,
                     std::size_t nSamples);

/// Number of angles ansatz() expects.
constexpr std::size_t ansatzParamCount(std::size_t wires, std::size_t layers) { return wires * layers * 2; }

/// Layered ansatz: per layer, H P(theta) H P(phi) on each wire, then CNOT(i, i+1) down the chain.
/// Angles are consumed layer by layer, wire by wire, theta before phi.
Circuit ansatz(std::size_t wires, std::size_t layers, std::span<const double> params);

struct VqeResult {
    double bestEnergy = 0.0;
    std::vector<double> bestParams;
    std::vector<VqeRecord> history;
};

VqeResult vqe(DeviceBackend &backend, const Hamiltonian &hamiltonian, std::size_t layers, std::size_t k,
              std::size_t nSamples, ParameterStrategy &strategy, RandomSource &random);

}  // namespace qlin
