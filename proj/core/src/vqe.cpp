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

#include "qlin/vqe.hpp"

#include <numbers>

#include "qlin/error.hpp"

namespace qlin {

Circuit encodingUnitary(const PauliString &term) {
    const auto first = term.firstNonIdentity();
    if (!first) {
        throw QuantumError(ErrorCode::AllIdentityTerm, "term " + term.toString() + " has no non-identity factor");
    }
    Circuit c(term.size());
    for (std::size_t w = 0; w < term.size(); ++w) {
        switch (term[w]) {
            case PauliOp::X:
                c.append(Hadamard{w});
                break;
            case PauliOp::Y:
                c.append(Phase{-std::numbers::pi / 2, w});
                c.append(Hadamard{w});
                break;
            case PauliOp::Z:
            case PauliOp::I:
                break;
        }
    }
    for (std::size_t w = *first + 1; w < term.size(); ++w) {
        if (term[w] != PauliOp::I) {
            c.append(ControlledNot{w, *first});
        }
    }
    return c;
}

double computeEnergyPauli(DeviceBackend &backend, const Circuit &ansatzCircuit, const PauliString &term,
                          std::size_t nSamples) {
    if (nSamples == 0) {
        throw QuantumError(ErrorCode::InvalidArgument, "nSamples must be at least 1");
    }
    if (ansatzCircuit.arity() != term.size()) {
        throw QuantumError(ErrorCode::ArityMismatch, "ansatz has " + std::to_string(ansatzCircuit.arity()) +
                                                         " wires, term " + term.toString() + " has " +
                                                         std::to_string(term.size()));
    }
    if (term.isIdentity()) {
        return 1.0;
    }
    const std::size_t readout = *term.firstNonIdentity();
    const Circuit circuit = compose(encodingUnitary(term), ansatzCircuit);
    const std::size_t n = circuit.arity();

    long long balance = 0;
    for (std::size_t shot = 0; shot < nSamples; ++shot) {
        const bool one = execute(backend, newQubits(n).bind([&circuit, readout](Qubits qs) {
            return applyCircuit(std::move(qs), circuit).bind([readout](Qubits out) {
                return measure(std::move(out)).map([readout](std::vector<bool> bits) -> bool { return bits[readout]; });
            });
        }));
        balance += one ? -1 : 1;
    }
    return static_cast<double>(balance) / static_cast<double>(nSamples);
}

double computeEnergy(DeviceBackend &backend, const Circuit &ansatzCircuit, const Hamiltonian &hamiltonian,
                     std::size_t nSamples) {
    double energy = 0.0;
    for (const HamiltonianTerm &t : hamiltonian.terms()) {
        if (t.term.isIdentity()) {
            energy += t.coefficient;
        } else {
            energy += t.coefficient * computeEnergyPauli(backend, ansatzCircuit, t.term, nSamples);
        }
    }
    return energy;
}

Circuit ansatz(std::size_t wires, std::size_t layers, std::span<const double> params) {
    if (params.size() != ansatzParamCount(wires, layers)) {
        throw QuantumError(ErrorCode::ParamCountMismatch, "ansatz needs " +
                                                              std::to_string(ansatzParamCount(wires, layers)) +
                                                              " angles, got " + std::to_string(params.size()));
    }
    Circuit c(wires);
    std::size_t next = 0;
    for (std::size_t l = 0; l < layers; ++l) {
        for (std::size_t w = 0; w < wires; ++w) {
            c.append(Hadamard{w});
            c.append(Phase{params[next++], w});
            c.append(Hadamard{w});
            c.append(Phase{params[next++], w});
        }
        for (std::size_t w = 0; w + 1 < wires; ++w) {
            c.append(ControlledNot{w, w + 1});
        }
    }
    return c;
}

VqeResult vqe(DeviceBackend &backend, const Hamiltonian &hamiltonian, std::size_t layers, std::size_t k,
              std::size_t nSamples, ParameterStrategy &strategy, RandomSource &random) {
    if (k == 0) {
        throw QuantumError(ErrorCode::InvalidArgument, "vqe needs at least one iteration");
    }
    const std::size_t n = hamiltonian.qubitCount();
    const std::size_t count = ansatzParamCount(n, layers);
    VqeResult result;
    result.history.reserve(k);
    for (std::size_t round = 0; round < k; ++round) {
        std::vector<double> params = strategy.proposeVqe(hamiltonian, result.history, count, random);
        const double energy = computeEnergy(backend, ansatz(n, layers, params), hamiltonian, nSamples);
        if (round == 0 || energy < result.bestEnergy) {
            result.bestEnergy = energy;
            result.bestParams = params;
        }
        result.history.push_back({std::move(params), energy});
    }
    return result;
}

}  // namespace qlin
