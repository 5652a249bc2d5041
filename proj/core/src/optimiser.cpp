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

#include "qlin/optimiser.hpp"

#include <numbers>

namespace qlin {

QaoaParams RandomSearch::proposeQaoa(const Graph &, std::span<const QaoaRecord>, std::size_t depth,
                                     RandomSource &random) {
    QaoaParams params;
    params.betas.reserve(depth);
    params.gammas.reserve(depth);
    for (std::size_t l = 0; l < depth; ++l) {
        params.betas.push_back(random.uniform(0.0, std::numbers::pi));
        params.gammas.push_back(random.uniform(0.0, 2.0 * std::numbers::pi));
    }
    return params;
}

std::vector<double> RandomSearch::proposeVqe(const Hamiltonian &, std::span<const VqeRecord>, std::size_t count,
                                             RandomSource &random) {
    std::vector<double> params(count);
    for (double &angle : params) {
        angle = random.uniform(0.0, 2.0 * std::numbers::pi);
    }
    return params;
}

QaoaParams classicalOptimisation(const Graph &graph, std::span<const QaoaRecord> history, std::size_t depth,
                                 RandomSource &random) {
    RandomSearch search;
    return search.proposeQaoa(graph, history, depth, random);
}

}  // namespace qlin
