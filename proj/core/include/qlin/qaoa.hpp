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

#include <span>
#include <vector>

#include "qlin/circuit.hpp"
#include "qlin/device.hpp"
#include "qlin/maxcut.hpp"
#include "qlin/optimiser.hpp"

namespace qlin {

/// Cost layer for one angle: CNOT(u,v) P(-2 gamma) on v CNOT(u,v) per edge,
/// i.e. |x> -> e^{-2 i gamma cutValue(x)} |x>.
Circuit qaoaCostLayer(double gamma, const Graph &graph);

/// Mixer layer: H P(2 beta) H on every wire.
Circuit qaoaMixerLayer(double beta, std::size_t vertexCount);

/// H on every wire, then (cost, mixer) for each of the p angle pairs.
/// Throws ParamCountMismatch if the angle lists differ in length.
Circuit qaoaUnitary(std::span<const double> betas, std::span<const double> gammas, const Graph &graph);

struct QaoaResult {
    Cut cut;
    std::size_t value = 0;
    std::vector<QaoaRecord> history;
};

/// k rounds of propose angles -> prepare -> measure all; returns the best sampled cut.
QaoaResult qaoa(DeviceBackend &backend, std::size_t k, std::size_t p, const Graph &graph,
                ParameterStrategy &strategy, RandomSource &random);

}  // namespace qlin
