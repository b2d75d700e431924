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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pauli_sched/graph.hpp"
#include "pauli_sched/instances.hpp"
#include "pauli_sched/order.hpp"
#include "pauli_sched/schedule.hpp"
#include "pauli_sched/search.hpp"
#include "pauli_sched/tracker.hpp"

namespace pauli_sched {

using Json = nlohmann::json;

/// Structurally malformed document (wrong types, missing keys, inconsistent lengths).
class FormatError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw FormatError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

template <class T>
T as_uint(const Json &j, const char *what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        throw FormatError(std::string(what) + " must be a non-negative integer");
    }
    return j.get<T>();
}

inline std::uint64_t parse_key(const std::string &s, const char *what) {
    std::size_t pos = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (s.empty() || pos != s.size() || s[0] == '-' || s[0] == '+') {
        throw FormatError(std::string("bad ") + what + " key '" + s + "'");
    }
    return v;
}

inline std::vector<bool> bits_from(const Json &j, std::size_t expected) {
    if (!j.is_array() || j.size() != expected) {
        throw FormatError("bit list must be an array of length " + std::to_string(expected));
    }
    std::vector<bool> out(expected);
    for (std::size_t i = 0; i < expected; ++i) {
        if (j[i].is_boolean()) {
            out[i] = j[i].get<bool>();
        } else if (j[i].is_number_integer() && (j[i] == 0 || j[i] == 1)) {
            out[i] = j[i] == 1;
        } else {
            throw FormatError("bits must be 0 or 1");
        }
    }
    return out;
}

inline Json bits_to(const std::vector<bool> &bits) {
    Json a = Json::array();
    for (bool b : bits) {
        a.push_back(b ? 1 : 0);
    }
    return a;
}

inline std::vector<Edge> edges_from(const Json &j) {
    if (!j.is_array()) {
        throw FormatError("'edges' must be an array");
    }
    std::vector<Edge> out;
    for (const Json &e : j) {
        if (!e.is_array() || e.size() != 2) {
            throw FormatError("each edge must be a pair [u, v]");
        }
        out.emplace_back(as_uint<Vertex>(e[0], "edge end"), as_uint<Vertex>(e[1], "edge end"));
    }
    return out;
}

inline Json edges_to(const std::vector<Edge> &edges) {
    Json a = Json::array();
    for (auto [u, v] : edges) {
        a.push_back({u, v});
    }
    return a;
}

inline VertexList vertices_from(const Json &j) {
    if (!j.is_array()) {
        throw FormatError("vertex list must be an array");
    }
    VertexList out;
    for (const Json &v : j) {
        out.push_back(as_uint<Vertex>(v, "vertex"));
    }
    return out;
}

}  // namespace detail

// Frames: {"frame_count": k, "stacks": {"<qubit>": {"z": [..], "x": [..]}},
//          "origins": {"<frame>": qubit}}

inline Json frames_to_json(const FrameTable &t) {
    Json stacks = Json::object();
    for (const auto &[q, s] : t.stacks) {
        stacks[std::to_string(q)] = {{"z", detail::bits_to(s.z)}, {"x", detail::bits_to(s.x)}};
    }
    Json origins = Json::object();
    for (const auto &[f, q] : t.origins) {
        origins[std::to_string(f)] = q;
    }
    return {{"frame_count", t.frame_count}, {"stacks", stacks}, {"origins", origins}};
}

inline FrameTable frames_from_json(const Json &j) {
    FrameTable t;
    t.frame_count = detail::as_uint<std::size_t>(detail::field(j, "frame_count"), "frame_count");
    const Json &stacks = detail::field(j, "stacks");
    if (!stacks.is_object()) {
        throw FormatError("'stacks' must be an object");
    }
    for (const auto &[key, s] : stacks.items()) {
        QubitId q = detail::parse_key(key, "qubit");
        t.stacks.emplace(q, FrameTable::Stack{detail::bits_from(detail::field(s, "z"), t.frame_count),
                                              detail::bits_from(detail::field(s, "x"), t.frame_count)});
    }
    if (j.contains("origins")) {
        const Json &origins = j.at("origins");
        if (!origins.is_object()) {
            throw FormatError("'origins' must be an object");
        }
        for (const auto &[key, q] : origins.items()) {
            std::size_t f = detail::parse_key(key, "frame");
            if (f >= t.frame_count) {
                throw FormatError("origin given for missing frame " + key);
            }
            t.origins.emplace(f, detail::as_uint<QubitId>(q, "origin"));
        }
    }
    return t;
}

// Graph: {"n": int, "edges": [[u, v], ...]}

inline Json graph_to_json(const Graph &g) {
    return {{"n", g.vertex_count()}, {"edges", detail::edges_to(g.edges())}};
}

inline Graph graph_from_json(const Json &j) {
    std::size_t n = detail::as_uint<std::size_t>(detail::field(j, "n"), "n");
    auto edges = detail::edges_from(detail::field(j, "edges"));
    try {
        return Graph(n, edges);
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
}

// Order: {"edges": [[u, v], ...]} (reduced or not). Written with "n" and "layers" too.

inline Json order_to_json(const OrderDag &o) {
    Json layers = Json::array();
    for (const auto &l : o.layers()) {
        layers.push_back(l);
    }
    return {{"n", o.vertex_count()}, {"edges", detail::edges_to(o.edges())}, {"layers", layers}};
}

/// `n` is the vertex count of the accompanying graph. Throws CycleError on cycles.
inline OrderDag order_from_json(const Json &j, std::size_t n) {
    if (j.contains("n") && detail::as_uint<std::size_t>(j.at("n"), "n") != n) {
        throw FormatError("order is over " + j.at("n").dump() + " vertices, expected " + std::to_string(n));
    }
    auto edges = detail::edges_from(detail::field(j, "edges"));
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw FormatError("order edge out of range");
        }
    }
    return OrderDag::from_edges(n, edges);
}

inline OrderDag order_from_json(const Json &j) {
    return order_from_json(j, detail::as_uint<std::size_t>(detail::field(j, "n"), "n"));
}

// Schedule: {"steps": [{"measure": [..], "alive": [..]}], "space": int, "time": int}

inline Json schedule_to_json(const Schedule &s) {
    Json steps = Json::array();
    for (const Step &st : s.steps) {
        steps.push_back({{"measure", st.measure}, {"alive", st.alive}});
    }
    Cost c = cost_of(s);
    return {{"steps", steps}, {"space", c.space}, {"time", c.time}};
}

inline Schedule schedule_from_json(const Json &j) {
    const Json &steps = detail::field(j, "steps");
    if (!steps.is_array()) {
        throw FormatError("'steps' must be an array");
    }
    Schedule s;
    for (const Json &st : steps) {
        s.steps.push_back(Step{detail::vertices_from(detail::field(st, "measure")),
                               detail::vertices_from(detail::field(st, "alive"))});
    }
    return s;
}

/// Cost stated in a schedule document, if any.
inline std::optional<Cost> claimed_cost(const Json &j) {
    if (!j.contains("space") || !j.contains("time")) {
        return std::nullopt;
    }
    return Cost{detail::as_uint<std::size_t>(j.at("space"), "space"),
                detail::as_uint<std::size_t>(j.at("time"), "time")};
}

// Frontier: {"frontier": [{"space": s, "time": t, "schedule": {...}}], "partial": bool,
//            "seed": u64, "wall_seconds": float}

inline Json frontier_to_json(const SearchResult &r) {
    Json entries = Json::array();
    for (const auto &e : r.frontier.entries()) {
        entries.push_back({{"space", e.cost.space}, {"time", e.cost.time}, {"schedule", schedule_to_json(e.schedule)}});
    }
    return {{"frontier", entries}, {"partial", r.partial}, {"seed", r.seed}, {"wall_seconds", r.wall_seconds}};
}

struct FrontierDocument {
    std::vector<FrontierEntry> entries;
    bool partial = false;
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;
};

inline FrontierDocument frontier_from_json(const Json &j) {
    FrontierDocument doc;
    const Json &entries = detail::field(j, "frontier");
    if (!entries.is_array()) {
        throw FormatError("'frontier' must be an array");
    }
    for (const Json &e : entries) {
        Cost c{detail::as_uint<std::size_t>(detail::field(e, "space"), "space"),
               detail::as_uint<std::size_t>(detail::field(e, "time"), "time")};
        doc.entries.push_back(FrontierEntry{c, schedule_from_json(detail::field(e, "schedule"))});
    }
    const Json &partial = detail::field(j, "partial");
    if (!partial.is_boolean()) {
        throw FormatError("'partial' must be a boolean");
    }
    doc.partial = partial.get<bool>();
    doc.seed = detail::as_uint<std::uint64_t>(detail::field(j, "seed"), "seed");
    const Json &wall = detail::field(j, "wall_seconds");
    if (!wall.is_number()) {
        throw FormatError("'wall_seconds' must be a number");
    }
    doc.wall_seconds = wall.get<double>();
    return doc;
}

// Instance spec: {"n": int, "pe": float, "pc": float, "seed": u64}

inline InstanceSpec instance_spec_from_json(const Json &j) {
    InstanceSpec spec;
    spec.n = detail::as_uint<std::size_t>(detail::field(j, "n"), "n");
    auto prob = [&](const char *key) {
        const Json &v = detail::field(j, key);
        if (!v.is_number()) {
            throw FormatError(std::string("'") + key + "' must be a number");
        }
        return v.get<double>();
    };
    spec.p_edge = prob("pe");
    spec.p_correction = prob("pc");
    spec.seed = j.contains("seed") ? detail::as_uint<std::uint64_t>(j.at("seed"), "seed") : 0;
    return spec;
}

inline Json instance_spec_to_json(const InstanceSpec &spec) {
    return {{"n", spec.n}, {"pe", spec.p_edge}, {"pc", spec.p_correction}, {"seed", spec.seed}};
}

}  // namespace pauli_sched
