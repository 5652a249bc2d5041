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

#include "qlin/maxcut.hpp"
#include "qlin/pauli.hpp"
#include "qlin/random.hpp"

namespace qlin {

struct QaoaParams {
    std::vector<double> betas;
    std::vector<double> gammas;
};

/// One QAOA round: the angles tried and the cut that was sampled.
struct QaoaRecord {
    QaoaParams params;
    Cut cut;
};

/// One VQE round: ansatz angles and the estimated energy.
struct VqeRecord {
    std::vector<double> params;
    double energy;
};

/// Classical half of the variational loop: proposes the next angles from the
/// history of earlier rounds. Implementations must be deterministic given
/// (history, random state).
class ParameterStrategy {
  public:
    virtual ~ParameterStrategy() = default;

    virtual QaoaParams proposeQaoa(const Graph &graph, std::span<const QaoaRecord> history, std::size_t depth,
                                   RandomSource &random) = 0;

    virtual std::vector<double> proposeVqe(const Hamiltonian &hamiltonian, std::span<const VqeRecord> history,
                                           std::size_t count, RandomSource &random) = 0;
};

/// Ignores history and samples fresh angles: beta in [0, pi), gamma in
/// [0, 2 pi), ansatz angles in [0, 2 pi).
class RandomSearch final : public ParameterStrategy {
  public:
    QaoaParams proposeQaoa(const Graph &graph, std::span<const QaoaRecord> history, std::size_t depth,
                           RandomSource &random) override;

    std::vector<double> proposeVqe(const Hamiltonian &hamiltonian, std::span<const VqeRecord> history,
                                   std::size_t count, RandomSource &random) override;
};

/// Default QAOA proposal (RandomSearch).
QaoaParams classicalOptimisation(const Graph &graph, std::span<const QaoaRecord> history, std::size_t depth,
                                 RandomSource &random);

}  // namespace qlin
