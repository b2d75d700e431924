// Copyright 2026 The pauli_sched Authors
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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pauli_sched {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
/// Sorted, duplicate-free list of vertices.
using VertexList = std::vector<Vertex>;

/// Undirected simple graph on vertices 0..n-1 (the graph state's entanglement).
class Graph {
   public:
    Graph() = default;
    explicit Graph(std::size_t n) : adjacency_(n) {
    }

    /// Throws std::invalid_argument unless the edges are distinct pairs of distinct vertices
    /// below n.
    Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
        for (auto [u, v] : edges) {
            if (u >= n || v >= n) {
                throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                            ") out of range for " + std::to_string(n) + " vertices");
            }
            if (u == v) {
                throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
            }
            adjacency_[u].push_back(v);
            adjacency_[v].push_back(u);
        }
        for (std::size_t v = 0; v < n; ++v) {
            auto &adj = adjacency_[v];
            std::sort(adj.begin(), adj.end());
            if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
                throw std::invalid_argument("repeated edge at vertex " + std::to_string(v));
            }
        }
        edge_count_ = edges.size();
    }

    std::size_t vertex_count() const {
        return adjacency_.size();
    }
    std::size_t edge_count() const {
        return edge_count_;
    }
    const VertexList &neighbors(Vertex v) const {
        return adjacency_.at(v);
    }
    bool has_edge(Vertex u, Vertex v) const {
        const auto &adj = adjacency_.at(u);
        return std::binary_search(adj.begin(), adj.end(), v);
    }
    /// Edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (Vertex u = 0; u < adjacency_.size(); ++u) {
            for (Vertex v : adjacency_[u]) {
                if (u < v) {
                    out.emplace_back(u, v);
                }
            }
        }
        return out;
    }

    bool operator==(const Graph &) const = default;

   private:
    std::vector<VertexList> adjacency_;
    std::size_t edge_count_ = 0;
};

}  // namespace pauli_sched
