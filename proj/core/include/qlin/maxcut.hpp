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

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace qlin {

struct Edge {
    std::size_t u;
    std::size_t v;
    bool operator==(const Edge &) const = default;
};

/// Undirected simple graph. Construction rejects self-loops, out-of-range
/// endpoints and duplicate edges (in either orientation) with InvalidGraph.
class Graph {
  public:
    Graph(std::size_t vertexCount, std::vector<Edge> edges);

    std::size_t vertexCount() const noexcept { return vertexCount_; }
    std::span<const Edge> edges() const noexcept { return edges_; }

    static Graph complete(std::size_t n);
    static Graph path(std::size_t n);

  private:
    std::size_t vertexCount_;
    std::vector<Edge> edges_;
};

/// Side of each vertex; cut[v] is the measured bit of qubit v.
using Cut = std::vector<bool>;

/// Number of edges whose endpoints lie on opposite sides.
std::size_t cutValue(const Graph &graph, const Cut &cut);

/// The first cut of maximal value. Throws InvalidArgument on an empty list.
std::pair<Cut, std::size_t> bestCut(const Graph &graph, std::span<const Cut> cuts);

/// All 2^n assignments, vertex 0 as the most significant bit.
std::vector<Cut> allCuts(std::size_t vertexCount);

}  // namespace qlin
