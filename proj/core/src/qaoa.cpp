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

#include "qlin/qaoa.hpp"

#include "qlin/error.hpp"

namespace qlin {

Circuit qaoaCostLayer(double gamma, const Graph &graph) {
    Circuit c(graph.vertexCount());
    for (const Edge &e : graph.edges()) {
        c.append(ControlledNot{e.u, e.v});
        c.append(Phase{-2.0 * gamma, e.v});
        c.append(ControlledNot{e.u, e.v});
    }
    return c;
}

Circuit qaoaMixerLayer(double beta, std::size_t vertexCount) {
    Circuit c(vertexCount);
    for (std::size_t w = 0; w < vertexCount; ++w) {
        c.append(Hadamard{w});
        c.append(Phase{2.0 * beta, w});
        c.append(Hadamard{w});
    }
    return c;
}

Circuit qaoaUnitary(std::span<const double> betas, std::span<const double> gammas, const Graph &graph) {
    if (betas.size() != gammas.size()) {
        throw QuantumError(ErrorCode::ParamCountMismatch, std::to_string(betas.size()) + " betas but " +
                                                              std::to_string(gammas.size()) + " gammas");
    }
    const std::size_t n = graph.vertexCount();
    Circuit c(n);
    for (std::size_t w = 0; w < n; ++w) {
        c.append(Hadamard{w});
    }
    for (std::size_t l = 0; l < betas.size(); ++l) {
        c = compose(qaoaCostLayer(gammas[l], graph), c);
        c = compose(qaoaMixerLayer(betas[l], n), c);
    }
    return c;
}

QaoaResult qaoa(DeviceBackend &backend, std::size_t k, std::size_t p, const Graph &graph,
                ParameterStrategy &strategy, RandomSource &random) {
    if (k == 0) {
        throw QuantumError(ErrorCode::InvalidArgument, "qaoa needs at least one iteration");
    }
    const std::size_t n = graph.vertexCount();
    QaoaResult result;
    result.history.reserve(k);
    std::vector<Cut> cuts;
    cuts.reserve(k);
    for (std::size_t round = 0; round < k; ++round) {
        QaoaParams params = strategy.proposeQaoa(graph, result.history, p, random);
        Circuit circuit = qaoaUnitary(params.betas, params.gammas, graph);
        Cut cut = execute(backend, newQubits(n).bind([circuit = std::move(circuit)](Qubits qs) mutable {
            return applyCircuit(std::move(qs), std::move(circuit)).bind([](Qubits out) {
                return measure(std::move(out));
            });
        }));
        cuts.push_back(cut);
        result.history.push_back({std::move(params), std::move(cut)});
    }
    std::tie(result.cut, result.value) = bestCut(graph, cuts);
    return result;
}

}  // namespace qlin
