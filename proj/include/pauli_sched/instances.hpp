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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pauli_sched/graph.hpp"
#include "pauli_sched/random.hpp"
#include "pauli_sched/tracker.hpp"

namespace pauli_sched {

/// Parameters of one random scheduling instance.
struct InstanceSpec {
    std::size_t n = 1;
    double p_edge = 0.0;
    double p_correction = 0.0;
    std::uint64_t seed = 0;
};

struct Instance {
    Graph graph;
    FrameTable frames;
};

namespace detail {

inline constexpr std::uint64_t kGraphStream = 1;
inline constexpr std::uint64_t kFramesStream = 2;

inline void check_spec(const InstanceSpec &spec) {
    if (spec.n < 1) {
        throw std::invalid_argument("instance needs at least one vertex");
    }
    auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!prob(spec.p_edge) || !prob(spec.p_correction)) {
        throw std::invalid_argument("densities must lie in [0, 1]");
    }
}

}  // namespace detail

/// Erdos-Renyi graph: each pair (u, v), u < v in lexicographic order, is an edge iff
/// the next uniform01() draw of SplitMix64(derive_seed(seed, 1)) is below p_edge.
inline Graph random_graph(const InstanceSpec &spec) {
    detail::check_spec(spec);
    SplitMix64 rng(derive_seed(spec.seed, detail::kGraphStream));
    std::vector<Edge> edges;
    for (Vertex u = 0; u < spec.n; ++u) {
        for (Vertex v = u + 1; v < spec.n; ++v) {
            if (rng.uniform01() < spec.p_edge) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(spec.n, edges);
}

/// Random frames inducing a random time order, drawn from SplitMix64(derive_seed(seed, 2)):
/// a Fisher-Yates shuffle (i from n-1 down to 1, swap with below(i + 1)) fixes the
/// measurement order; then for each picked vertex u, in order, every vertex picked after
/// it gets a correction with probability p_correction, X or Z by the low bit of the next
/// draw. Frame i has origin perm[i].
inline FrameTable random_frames(const InstanceSpec &spec) {
    detail::check_spec(spec);
    SplitMix64 rng(derive_seed(spec.seed, detail::kFramesStream));
    std::vector<QubitId> perm(spec.n);
    std::iota(perm.begin(), perm.end(), QubitId{0});
    for (std::size_t i = spec.n - 1; i >= 1; --i) {
        std::swap(perm[i], perm[rng.below(i + 1)]);
    }
    Frames<WordBits> frames;
    for (QubitId q = 0; q < spec.n; ++q) {
        frames.new_qubit(q);
    }
    std::vector<std::pair<QubitId, PauliEnc>> corrections;
    for (std::size_t i = 0; i < spec.n; ++i) {
        corrections.clear();
        for (std::size_t j = i + 1; j < spec.n; ++j) {
            if (rng.uniform01() < spec.p_correction) {
                corrections.emplace_back(perm[j], (rng.next() & 1) ? PauliEnc::X() : PauliEnc::Z());
            }
        }
        frames.new_frame(perm[i], corrections);
    }
    return snapshot(frames);
}

inline Instance generate_instance(const InstanceSpec &spec) {
    return Instance{random_graph(spec), random_frames(spec)};
}

/// Edge and correction density 0.5 / sqrt(n - 1) used for the size sweeps.
inline double density_for_size(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("density_for_size needs n >= 2");
    }
    return 0.5 / std::sqrt(static_cast<double>(n - 1));
}

}  // namespace pauli_sched
