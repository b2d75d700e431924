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
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pauli_sched/bits.hpp"
#include "pauli_sched/graph.hpp"
#include "pauli_sched/tracker.hpp"

namespace pauli_sched {

/// The dependency relation has a cycle; `witness()` lists one, each vertex preceding the
/// next and the last preceding the first.
class CycleError : public std::runtime_error {
   public:
    explicit CycleError(std::vector<Vertex> witness)
        : std::runtime_error(describe(witness)), witness_(std::move(witness)) {
    }
    const std::vector<Vertex> &witness() const {
        return witness_;
    }

   private:
    static std::string describe(const std::vector<Vertex> &w) {
        std::string s = "time order has a cycle:";
        for (Vertex v : w) {
            s += ' ' + std::to_string(v) + " ->";
        }
        if (!w.empty()) {
            s += ' ' + std::to_string(w.front());
        }
        return s;
    }
    std::vector<Vertex> witness_;
};

namespace detail {

inline std::vector<VertexList> adjacency_from(std::size_t n, std::span<const Edge> edges,
                                              bool forward) {
    std::vector<VertexList> adj(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw std::invalid_argument("order edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                        ") out of range for " + std::to_string(n) + " vertices");
        }
        if (u == v) {
            throw CycleError({u});
        }
        if (forward) {
            adj[u].push_back(v);
        } else {
            adj[v].push_back(u);
        }
    }
    for (auto &a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return adj;
}

/// Kahn's algorithm; throws CycleError with a concrete cycle if none exists.
inline std::vector<Vertex> topological_order(const std::vector<VertexList> &succ,
                                             const std::vector<VertexList> &pred) {
    std::size_t n = succ.size();
    std::vector<std::size_t> indegree(n);
    for (std::size_t v = 0; v < n; ++v) {
        indegree[v] = pred[v].size();
    }
    std::vector<Vertex> order;
    order.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
        if (indegree[v] == 0) {
            order.push_back(v);
        }
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (Vertex w : succ[order[head]]) {
            if (--indegree[w] == 0) {
                order.push_back(w);
            }
        }
    }
    if (order.size() == n) {
        return order;
    }
    // Every leftover vertex keeps a leftover predecessor, so walking predecessors
    // must revisit a vertex.
    Vertex start = 0;
    while (indegree[start] == 0) {
        ++start;
    }
    std::vector<std::size_t> seen_at(n, SIZE_MAX);
    std::vector<Vertex> walk;
    Vertex v = start;
    while (seen_at[v] == SIZE_MAX) {
        seen_at[v] = walk.size();
        walk.push_back(v);
        for (Vertex p : pred[v]) {
            if (indegree[p] != 0) {
                v = p;
                break;
            }
        }
    }
    std::vector<Vertex> cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[v]), walk.end());
    std::reverse(cycle.begin(), cycle.end());
    throw CycleError(std::move(cycle));
}

}  // namespace detail

/// Minimal edge set with the same reachability as `edges` (unique for a DAG), sorted.
/// Runs in O(|V| + |E| |V| / 64) using one reachability bit row per vertex.
inline std::vector<Edge> transitive_reduction(std::size_t n, std::span<const Edge> edges) {
    auto succ = detail::adjacency_from(n, edges, true);
    auto pred = detail::adjacency_from(n, edges, false);
    auto topo = detail::topological_order(succ, pred);
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) {
        position[topo[i]] = i;
    }
    std::vector<WordBits> reach(n, WordBits(n));
    std::vector<Edge> kept;
    for (std::size_t i = n; i-- > 0;) {
        Vertex u = topo[i];
        VertexList s = succ[u];
        std::sort(s.begin(), s.end(),
                  [&](Vertex a, Vertex b) { return position[a] < position[b]; });
        for (Vertex v : s) {
            if (!reach[u].get(v)) {
                kept.emplace_back(u, v);
                reach[u] |= reach[v];
                reach[u].set(v, true);
            }
        }
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

/// Strict partial order on measurements, kept as a transitively reduced DAG together
/// with its layering: layer 0 holds the minimal vertices and every other vertex sits one
/// layer above its highest predecessor.
class OrderDag {
   public:
    OrderDag() = default;
    explicit OrderDag(std::size_t n) : pred_(n), succ_(n), layer_(n, 0) {
        if (n > 0) {
            layers_.emplace_back();
            for (Vertex v = 0; v < n; ++v) {
                layers_[0].push_back(v);
            }
        }
    }

    /// Accepts any acyclic edge set (redundant edges allowed) and reduces it.
    static OrderDag from_edges(std::size_t n, std::span<const Edge> edges) {
        OrderDag dag(n);
        dag.edges_ = transitive_reduction(n, edges);
        for (auto [u, v] : dag.edges_) {
            dag.succ_[u].push_back(v);
            dag.pred_[v].push_back(u);
        }
        auto topo = detail::topological_order(dag.succ_, dag.pred_);
        std::size_t depth = n > 0 ? 1 : 0;
        for (Vertex v : topo) {
            std::size_t l = 0;
            for (Vertex p : dag.pred_[v]) {
                l = std::max(l, dag.layer_[p] + 1);
            }
            dag.layer_[v] = l;
            depth = std::max(depth, l + 1);
        }
        dag.layers_.assign(depth, {});
        for (Vertex v = 0; v < n; ++v) {
            dag.layers_[dag.layer_[v]].push_back(v);
        }
        return dag;
    }

    std::size_t vertex_count() const {
        return layer_.size();
    }
    /// Reduced edges u -> v (u before v), sorted.
    const std::vector<Edge> &edges() const {
        return edges_;
    }
    const VertexList &predecessors(Vertex v) const {
        return pred_.at(v);
    }
    const VertexList &successors(Vertex v) const {
        return succ_.at(v);
    }
    /// 0-based layer index; reports add one.
    std::size_t layer_of(Vertex v) const {
        return layer_.at(v);
    }
    const std::vector<VertexList> &layers() const {
        return layers_;
    }
    /// Number of layers, i.e. the length of the longest chain.
    std::size_t depth() const {
        return layers_.size();
    }

    bool operator==(const OrderDag &o) const {
        return edges_ == o.edges_ && layer_.size() == o.layer_.size();
    }

   private:
    std::vector<Edge> edges_;
    std::vector<VertexList> pred_;
    std::vector<VertexList> succ_;
    std::vector<std::size_t> layer_;
    std::vector<VertexList> layers_;
};

/// Decides whether a correction `p` induced on `target` by measuring `origin` orders the
/// two measurements. Lets callers drop corrections that the later measurement absorbs.
using DependencyFilter = std::function<bool(QubitId origin, QubitId target, PauliEnc p)>;

struct OrderOptions {
    /// origin qubit per frame, overriding the table's recorded origins.
    std::optional<std::vector<QubitId>> origins;
    /// Empty means every non-identity correction creates a dependency.
    DependencyFilter keep;
};

/// Builds the measurement order from tracked frames: origin(f) precedes every other
/// qubit on which frame f is not the identity. Qubit ids are used as vertex ids.
///
/// Throws std::invalid_argument when a frame lacks an origin or an id is out of range,
/// and CycleError when the dependencies are cyclic.
inline OrderDag order_from_frames(const FrameTable &frames, std::size_t vertex_count,
                                  const OrderOptions &options = {}) {
    auto origin_of = [&](std::size_t f) -> QubitId {
        if (options.origins) {
            if (f >= options.origins->size()) {
                throw std::invalid_argument("no origin given for frame " + std::to_string(f));
            }
            return (*options.origins)[f];
        }
        auto it = frames.origins.find(f);
        if (it == frames.origins.end()) {
            throw std::invalid_argument("frame " + std::to_string(f) + " has no recorded origin");
        }
        return it->second;
    };
    auto check = [&](QubitId q) {
        if (q >= vertex_count) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " is not a vertex (" +
                                        std::to_string(vertex_count) + " vertices)");
        }
    };

    std::vector<QubitId> origin(frames.frame_count);
    for (std::size_t f = 0; f < frames.frame_count; ++f) {
        origin[f] = origin_of(f);
        check(origin[f]);
    }
    std::vector<Edge> edges;
    for (const auto &[q, stack] : frames.stacks) {
        check(q);
        for (std::size_t f = 0; f < frames.frame_count; ++f) {
            PauliEnc p{stack.z[f], stack.x[f]};
            if (p.is_identity() || q == origin[f]) {
                continue;
            }
            if (options.keep && !options.keep(origin[f], q, p)) {
                continue;
            }
            edges.emplace_back(static_cast<Vertex>(origin[f]), static_cast<Vertex>(q));
        }
    }
    return OrderDag::from_edges(vertex_count, edges);
}

/// Same, with the vertex count taken as one past the largest id mentioned.
inline OrderDag order_from_frames(const FrameTable &frames, const OrderOptions &options = {}) {
    std::size_t n = 0;
    for (const auto &[q, s] : frames.stacks) {
        n = std::max<std::size_t>(n, q + 1);
    }
    for (const auto &[f, q] : frames.origins) {
        n = std::max<std::size_t>(n, q + 1);
    }
    if (options.origins) {
        for (QubitId q : *options.origins) {
            n = std::max<std::size_t>(n, q + 1);
        }
    }
    return order_from_frames(frames, n, options);
}

}  // namespace pauli_sched
