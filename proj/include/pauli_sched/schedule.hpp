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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pauli_sched/graph.hpp"
#include "pauli_sched/order.hpp"

namespace pauli_sched {

/// Ordered sequence of disjoint, nonempty measurement sets covering every vertex.
using Pattern = std::vector<VertexList>;

/// One schedule step: measure `measure` while `alive` is initialised and entangled.
struct Step {
    VertexList measure;
    VertexList alive;
    bool operator==(const Step &) const = default;
};

struct Schedule {
    std::vector<Step> steps;
    bool operator==(const Schedule &) const = default;
};

/// space = most qubits alive in any step, time = number of steps.
struct Cost {
    std::size_t space = 0;
    std::size_t time = 0;
    bool operator==(const Cost &) const = default;
};

/// a is no worse than b in both coordinates and better in at least one.
constexpr bool dominates(Cost a, Cost b) {
    return a.space <= b.space && a.time <= b.time && (a.space < b.space || a.time < b.time);
}

constexpr bool weakly_dominates(Cost a, Cost b) {
    return a.space <= b.space && a.time <= b.time;
}

/// First broken schedule (or pattern) condition. `step` is 1-based; a global coverage
/// failure reports the step count.
///
/// Schedule conditions:
///   1. the measured vertices and their not-yet-measured neighbours are alive;
///   2. every predecessor of a measured vertex was measured in an earlier step;
///   3. the measurement sets partition the vertex set;
///   4. whatever stayed alive from the previous step is still alive, and no vertex that
///      was already measured is alive again.
/// Patterns use 2 (order) and 3 (partition), plus condition 0 for an empty set.
struct Violation {
    int condition = 0;
    std::size_t step = 0;
    std::string detail;
};

class InvalidPattern : public std::invalid_argument {
   public:
    explicit InvalidPattern(const Violation &v)
        : std::invalid_argument("invalid pattern at set " + std::to_string(v.step) + ": " + v.detail),
          index_(v.step) {
    }
    /// 1-based index of the first offending set.
    std::size_t index() const {
        return index_;
    }

   private:
    std::size_t index_;
};

namespace detail {

inline void require_same_vertices(const Graph &g, const OrderDag &order) {
    if (g.vertex_count() != order.vertex_count()) {
        throw std::invalid_argument("graph has " + std::to_string(g.vertex_count()) +
                                    " vertices but the order has " +
                                    std::to_string(order.vertex_count()));
    }
}

inline VertexList members(const std::vector<char> &mask) {
    VertexList out;
    for (Vertex v = 0; v < mask.size(); ++v) {
        if (mask[v]) {
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace detail

inline std::optional<Violation> pattern_violation(const OrderDag &order, const Pattern &p) {
    std::size_t n = order.vertex_count();
    std::vector<char> measured(n, 0);
    std::size_t covered = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::size_t step = i + 1;
        if (p[i].empty()) {
            return Violation{0, step, "empty measurement set"};
        }
        for (Vertex v : p[i]) {
            if (v >= n) {
                return Violation{3, step, "vertex " + std::to_string(v) + " out of range"};
            }
            if (measured[v]) {
                return Violation{3, step, "vertex " + std::to_string(v) + " measured twice"};
            }
            for (Vertex u : order.predecessors(v)) {
                if (!measured[u]) {
                    return Violation{2, step, "vertex " + std::to_string(v) + " before its predecessor " +
                                                  std::to_string(u)};
                }
            }
        }
        for (Vertex v : p[i]) {
            if (measured[v]) {
                return Violation{3, step, "vertex " + std::to_string(v) + " repeated in one set"};
            }
            measured[v] = 1;
            ++covered;
        }
    }
    if (covered != n) {
        return Violation{3, p.size(), std::to_string(n - covered) + " vertices never measured"};
    }
    return std::nullopt;
}

/// The minimal schedule realising pattern p:
///   alive_i = M_i + (unmeasured neighbours of M_i) + (alive_{i-1} - M_{i-1}).
///
/// Neighbours measured in an earlier step are excluded; their entanglement was created
/// while both ends were alive. Throws InvalidPattern.
inline Schedule schedule_from_pattern(const Graph &g, const OrderDag &order, const Pattern &p) {
    detail::require_same_vertices(g, order);
    if (auto v = pattern_violation(order, p)) {
        throw InvalidPattern(*v);
    }
    std::size_t n = g.vertex_count();
    std::vector<char> measured(n, 0);
    std::vector<char> alive(n, 0);
    Schedule s;
    s.steps.reserve(p.size());
    for (const VertexList &m : p) {
        for (Vertex v : m) {
            alive[v] = 1;
            for (Vertex w : g.neighbors(v)) {
                if (!measured[w]) {
                    alive[w] = 1;
                }
            }
        }
        Step step;
        step.measure = m;
        std::sort(step.measure.begin(), step.measure.end());
        step.alive = detail::members(alive);
        s.steps.push_back(std::move(step));
        for (Vertex v : m) {
            measured[v] = 1;
            alive[v] = 0;
        }
    }
    return s;
}

/// Checks the four schedule conditions step by step and returns the first violation.
inline std::optional<Violation> validate_schedule(const Graph &g, const OrderDag &order,
                                                  const Schedule &s) {
    detail::require_same_vertices(g, order);
    std::size_t n = g.vertex_count();
    std::vector<char> measured(n, 0);
    std::vector<char> carried(n, 0);  // alive_{i-1} - M_{i-1}
    std::vector<char> alive(n, 0);
    std::size_t covered = 0;
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
        std::size_t step = i + 1;
        const Step &st = s.steps[i];
        std::fill(alive.begin(), alive.end(), 0);
        for (Vertex v : st.alive) {
            if (v >= n) {
                return Violation{4, step, "alive vertex " + std::to_string(v) + " out of range"};
            }
            alive[v] = 1;
        }
        for (Vertex v : st.measure) {
            if (v >= n) {
                return Violation{3, step, "measured vertex " + std::to_string(v) + " out of range"};
            }
        }
        for (Vertex v : st.measure) {
            if (!alive[v]) {
                return Violation{1, step, "measured vertex " + std::to_string(v) + " not alive"};
            }
            for (Vertex w : g.neighbors(v)) {
                if (!measured[w] && !alive[w]) {
                    return Violation{1, step, "neighbour " + std::to_string(w) + " of " +
                                                  std::to_string(v) + " not alive"};
                }
            }
        }
        for (Vertex v : st.measure) {
            for (Vertex u : order.predecessors(v)) {
                if (!measured[u]) {
                    return Violation{2, step, "vertex " + std::to_string(v) + " measured before " +
                                                  std::to_string(u)};
                }
            }
        }
        for (Vertex v : st.measure) {
            if (measured[v]) {
                return Violation{3, step, "vertex " + std::to_string(v) + " measured twice"};
            }
        }
        for (Vertex v = 0; v < n; ++v) {
            if (carried[v] && !alive[v]) {
                return Violation{4, step, "vertex " + std::to_string(v) + " dropped before measurement"};
            }
            if (alive[v] && measured[v]) {
                return Violation{4, step, "vertex " + std::to_string(v) + " alive after its measurement"};
            }
        }
        carried = alive;
        for (Vertex v : st.measure) {
            if (measured[v]) {
                return Violation{3, step, "vertex " + std::to_string(v) + " repeated in one step"};
            }
            measured[v] = 1;
            carried[v] = 0;
            ++covered;
        }
    }
    if (covered != n) {
        return Violation{3, s.steps.size(), std::to_string(n - covered) + " vertices never measured"};
    }
    return std::nullopt;
}

inline Cost cost_of(const Schedule &s) {
    Cost c{0, s.steps.size()};
    for (const Step &st : s.steps) {
        c.space = std::max(c.space, st.alive.size());
    }
    return c;
}

inline Pattern pattern_of(const Schedule &s) {
    Pattern p;
    for (const Step &st : s.steps) {
        p.push_back(st.measure);
    }
    return p;
}

/// Measures every vertex as soon as the order allows, i.e. layer by layer. Its time cost
/// is the length of the longest chain, the minimum over all schedules.
inline Schedule trivial_time_optimal(const Graph &g, const OrderDag &order) {
    return schedule_from_pattern(g, order, order.layers());
}

}  // namespace pauli_sched
