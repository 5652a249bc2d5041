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

#include "qlin/maxcut.hpp"

#include <algorithm>
#include <string>

#include "qlin/error.hpp"

namespace qlin {

Graph::Graph(std::size_t vertexCount, std::vector<Edge> edges)
    : vertexCount_(vertexCount), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge &e = edges_[i];
        if (e.u >= vertexCount_ || e.v >= vertexCount_) {
            throw QuantumError(ErrorCode::InvalidGraph, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                                            ") outside " + std::to_string(vertexCount_) +
                                                            " vertices");
        }
        if (e.u == e.v) {
            throw QuantumError(ErrorCode::InvalidGraph, "self-loop on vertex " + std::to_string(e.u));
        }
        for (std::size_t j = 0; j < i; ++j) {
            const Edge &f = edges_[j];
            if ((f.u == e.u && f.v == e.v) || (f.u == e.v && f.v == e.u)) {
                throw QuantumError(ErrorCode::InvalidGraph, "duplicate edge (" + std::to_string(e.u) + "," +
                                                                std::to_string(e.v) + ")");
            }
        }
    }
}

Graph Graph::complete(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            edges.push_back({u, v});
        }
    }
    return Graph(n, std::move(edges));
}

Graph Graph::path(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u + 1 < n; ++u) {
        edges.push_back({u, u + 1});
    }
    return Graph(n, std::move(edges));
}

std::size_t cutValue(const Graph &graph, const Cut &cut) {
    if (cut.size() != graph.vertexCount()) {
        throw QuantumError(ErrorCode::InvalidArgument, "cut has " + std::to_string(cut.size()) +
                                                           " entries for a graph with " +
                                                           std::to_string(graph.vertexCount()) + " vertices");
    }
    return static_cast<std::size_t>(std::count_if(graph.edges().begin(), graph.edges().end(),
                                                  [&](const Edge &e) { return cut[e.u] != cut[e.v]; }));
}

std::pair<Cut, std::size_t> bestCut(const Graph &graph, std::span<const Cut> cuts) {
    if (cuts.empty()) {
        throw QuantumError(ErrorCode::InvalidArgument, "bestCut needs at least one candidate");
    }
    std::size_t best = 0;
    std::size_t bestValue = cutValue(graph, cuts[0]);
    for (std::size_t i = 1; i < cuts.size(); ++i) {
        const std::size_t value = cutValue(graph, cuts[i]);
        if (value > bestValue) {
            best = i;
            bestValue = value;
        }
    }
    return {cuts[best], bestValue};
}

std::vector<Cut> allCuts(std::size_t vertexCount) {
    const std::size_t total = std::size_t{1} << vertexCount;
    std::vector<Cut> out;
    out.reserve(total);
    for (std::size_t x = 0; x < total; ++x) {
        Cut cut(vertexCount);
        for (std::size_t v = 0; v < vertexCount; ++v) {
            cut[v] = ((x >> (vertexCount - 1 - v)) & 1U) != 0;
        }
        out.push_back(std::move(cut));
    }
    return out;
}

}  // namespace qlin
