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
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

#include "pauli_sched/acceptance.hpp"
#include "pauli_sched/bits.hpp"
#include "pauli_sched/graph.hpp"
#include "pauli_sched/order.hpp"
#include "pauli_sched/pareto.hpp"
#include "pauli_sched/random.hpp"
#include "pauli_sched/schedule.hpp"

namespace pauli_sched {

enum class SearchMode { Exact, Approximate };

struct SearchConfig {
    SearchMode mode = SearchMode::Exact;
    /// Wall-clock budget is timeout_scale * |V|^2 seconds for the whole search.
    double timeout_scale = 0.05;
    AcceptanceParams acceptance;
    std::uint64_t rng_seed = 0;
    std::size_t workers = 1;
    /// Enables the remaining-chain time bound and the measurement of "free" vertices
    /// (alive vertices whose whole neighbourhood is already alive). Both leave the
    /// exact frontier unchanged. Off means pruning on costs so far only.
    bool refined_pruning = true;
    /// Cap on remembered (measured, alive) states per worker.
    std::size_t memo_limit = std::size_t{1} << 22;
};

struct SearchResult {
    ParetoFront frontier;
    /// The budget ran out before the search space was exhausted.
    bool partial = false;
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;
    /// Measurement sets evaluated, summed over workers.
    std::uint64_t evaluated = 0;
};

/// Position inside the pattern search: a partial pattern and its running costs.
struct SearchState {
    VertexList measured;
    VertexList alive;
    Pattern steps_so_far;
    std::size_t space_so_far = 0;
    std::size_t time_so_far = 0;
};

/// Unmeasured vertices all of whose predecessors are measured.
inline VertexList measurable_now(const SearchState &state, const OrderDag &order) {
    std::vector<char> measured(order.vertex_count(), 0);
    for (Vertex v : state.measured) {
        measured.at(v) = 1;
    }
    VertexList out;
    for (Vertex v = 0; v < order.vertex_count(); ++v) {
        if (measured[v]) {
            continue;
        }
        const auto &preds = order.predecessors(v);
        if (std::all_of(preds.begin(), preds.end(), [&](Vertex u) { return measured[u] != 0; })) {
            out.push_back(v);
        }
    }
    return out;
}

namespace detail {

/// Shared, monotonically improving frontier. Workers keep a cost snapshot and refresh
/// it whenever the version moves.
class SharedFrontier {
   public:
    explicit SharedFrontier(ParetoFront initial) : front_(std::move(initial)) {
    }
    bool insert(Cost c, Schedule s) {
        std::lock_guard lock(mu_);
        bool added = front_.insert(c, std::move(s));
        if (added) {
            version_.fetch_add(1, std::memory_order_release);
        }
        return added;
    }
    std::uint64_t version() const {
        return version_.load(std::memory_order_acquire);
    }
    std::vector<Cost> costs() const {
        std::lock_guard lock(mu_);
        return front_.costs();
    }
    ParetoFront take() {
        std::lock_guard lock(mu_);
        return std::move(front_);
    }

   private:
    mutable std::mutex mu_;
    ParetoFront front_;
    std::atomic<std::uint64_t> version_{1};
};

template <class Set>
struct SearchProblem {
    const Graph &graph;
    const OrderDag &order;
    SearchConfig config;
    std::size_t n = 0;
    std::vector<Set> closed_nbhd;
    std::vector<Set> preds;
    std::vector<std::size_t> tail_height;
    std::vector<Vertex> by_tail_height;
    std::chrono::steady_clock::time_point deadline;

    SearchProblem(const Graph &g, const OrderDag &o, const SearchConfig &cfg)
        : graph(g), order(o), config(cfg), n(g.vertex_count()) {
        closed_nbhd.assign(n, Set(n));
        preds.assign(n, Set(n));
        for (Vertex v = 0; v < n; ++v) {
            closed_nbhd[v].set(v, true);
            for (Vertex w : g.neighbors(v)) {
                closed_nbhd[v].set(w, true);
            }
            for (Vertex u : o.predecessors(v)) {
                preds[v].set(u, true);
            }
        }
        // Longest chain starting at v, counted in vertices; successors sit in higher layers.
        tail_height.assign(n, 1);
        for (std::size_t l = o.depth(); l-- > 0;) {
            for (Vertex v : o.layers()[l]) {
                for (Vertex w : o.successors(v)) {
                    tail_height[v] = std::max(tail_height[v], tail_height[w] + 1);
                }
            }
        }
        by_tail_height.resize(n);
        for (Vertex v = 0; v < n; ++v) {
            by_tail_height[v] = v;
        }
        std::stable_sort(by_tail_height.begin(), by_tail_height.end(),
                         [&](Vertex a, Vertex b) { return tail_height[a] > tail_height[b]; });
    }

    std::size_t remaining_chain(const Set &measured) const {
        for (Vertex v : by_tail_height) {
            if (!measured.get(v)) {
                return tail_height[v];
            }
        }
        return 0;
    }
};

template <class Set>
class SearchWorker {
   public:
    SearchWorker(const SearchProblem<Set> &p, SharedFrontier &shared, std::atomic<bool> &stop,
                 std::size_t worker_id)
        : p_(p), shared_(shared), stop_(stop), worker_id_(worker_id) {
    }

    void run() {
        Set empty(p_.n);
        path_.assign(p_.n + 1, Set(p_.n));
        scratch_.assign(p_.n + 1, {});
        refresh();
        dfs(empty, empty, 0, 0, 0, derive_seed(p_.config.rng_seed, 0x5eedULL), 0);
    }

    std::uint64_t evaluated() const {
        return evaluated_;
    }
    bool timed_out() const {
        return timed_out_;
    }

   private:
    struct Key {
        Set measured;
        Set alive;
        bool operator==(const Key &) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key &k) const {
            return k.measured.hash() * 31 + k.alive.hash();
        }
    };
    struct Scratch {
        std::vector<Vertex> candidates;
        std::vector<Vertex> enumerated;
        std::vector<std::size_t> combo;
    };

    bool exact() const {
        return p_.config.mode == SearchMode::Exact;
    }

    void refresh() {
        std::uint64_t v = shared_.version();
        if (v != seen_version_) {
            front_ = shared_.costs();
            seen_version_ = v;
        }
    }

    bool covered(Cost c) const {
        for (const Cost &e : front_) {
            if (weakly_dominates(e, c)) {
                return true;
            }
        }
        return false;
    }

    std::size_t best_space() const {
        return front_.empty() ? p_.n + 1 : front_.back().space;
    }

    bool tick() {
        if ((++evaluated_ & 1023) == 0) {
            if (std::chrono::steady_clock::now() >= p_.deadline) {
                timed_out_ = true;
                stop_.store(true, std::memory_order_relaxed);
            }
        }
        return stop_.load(std::memory_order_relaxed);
    }

    /// Returns true when the state should be expanded and records it.
    bool remember(const Set &measured, const Set &alive, Cost c) {
        Key key{measured, alive};
        auto it = memo_.find(key);
        if (it == memo_.end()) {
            if (memo_.size() < p_.config.memo_limit) {
                memo_.emplace(std::move(key), std::vector<Cost>{c});
            }
            return true;
        }
        auto &seen = it->second;
        for (const Cost &s : seen) {
            if (weakly_dominates(s, c)) {
                return false;
            }
        }
        std::erase_if(seen, [&](const Cost &s) { return dominates(c, s); });
        seen.push_back(c);
        return true;
    }

    void record(std::size_t depth, Cost c) {
        refresh();
        if (covered(c)) {
            return;
        }
        Pattern pattern(depth);
        for (std::size_t i = 0; i < depth; ++i) {
            path_[i].for_each([&](std::size_t v) { pattern[i].push_back(static_cast<Vertex>(v)); });
        }
        Schedule s = schedule_from_pattern(p_.graph, p_.order, pattern);
        if (validate_schedule(p_.graph, p_.order, s) || !(cost_of(s) == c)) {
            throw std::logic_error("search produced a schedule that does not realise its cost");
        }
        shared_.insert(c, std::move(s));
        refresh();
    }

    void dfs(const Set &measured, const Set &carry, std::size_t measured_count, std::size_t space,
             std::size_t time, std::uint64_t key, std::size_t depth) {
        if (measured_count == p_.n) {
            record(depth, Cost{space, time});
            return;
        }
        refresh();
        const bool refined = p_.config.refined_pruning;
        Scratch &sc = scratch_[depth];
        sc.candidates.clear();
        Set all_candidates = measured;
        for (Vertex v = 0; v < p_.n; ++v) {
            if (!measured.get(v) && p_.preds[v].subset_of(measured)) {
                sc.candidates.push_back(v);
                all_candidates.set(v, true);
            }
        }
        // Least time any child can finish in; a vertex whose own neighbourhood already
        // forces a covered cost cannot be part of a useful measurement set.
        std::size_t min_time = time + 1 + (refined ? p_.remaining_chain(all_candidates) : 0);
        sc.enumerated.clear();
        for (Vertex v : sc.candidates) {
            Set alone = p_.closed_nbhd[v];
            alone.subtract(measured);
            alone |= carry;
            std::size_t s = std::max(space, alone.count());
            bool useless = exact() ? covered(Cost{s, min_time}) : s >= best_space();
            if (!useless) {
                sc.enumerated.push_back(v);
            }
        }

        const std::size_t k = sc.enumerated.size();
        std::uint64_t rank = 0;
        for (std::size_t r = k; r >= 1; --r) {
            auto &combo = sc.combo;
            combo.resize(r);
            for (std::size_t i = 0; i < r; ++i) {
                combo[i] = i;
            }
            while (true) {
                std::uint64_t this_rank = rank++;
                if (depth > 0 || this_rank % p_.config.workers == worker_id_) {
                    if (tick()) {
                        return;
                    }
                    expand(measured, carry, measured_count, space, time, key, depth, this_rank);
                    if (stop_.load(std::memory_order_relaxed)) {
                        return;
                    }
                }
                // Next r-combination of 0..k-1 in lexicographic order.
                std::size_t i = r;
                while (i > 0 && combo[i - 1] == k - r + (i - 1)) {
                    --i;
                }
                if (i == 0) {
                    break;
                }
                ++combo[i - 1];
                for (std::size_t j = i; j < r; ++j) {
                    combo[j] = combo[j - 1] + 1;
                }
            }
        }
    }

    void expand(const Set &measured, const Set &carry, std::size_t measured_count, std::size_t space,
                std::size_t time, std::uint64_t key, std::size_t depth, std::uint64_t rank) {
        const Scratch &sc = scratch_[depth];
        Set m(p_.n);
        Set alive = carry;
        for (std::size_t idx : sc.combo) {
            Vertex v = sc.enumerated[idx];
            m.set(v, true);
            Set nb = p_.closed_nbhd[v];
            nb.subtract(measured);
            alive |= nb;
        }
        if (p_.config.refined_pruning) {
            for (Vertex v : sc.candidates) {
                if (m.get(v) || !alive.get(v)) {
                    continue;
                }
                Set nb = p_.closed_nbhd[v];
                nb.subtract(measured);
                if (nb.subset_of(alive)) {
                    m.set(v, true);
                }
            }
        }
        Set next_measured = measured;
        next_measured |= m;
        std::size_t next_count = measured_count + m.count();
        Cost next{std::max(space, alive.count()), time + 1};
        std::uint64_t child_key = derive_seed(key, rank + 1);

        if (exact()) {
            std::size_t lb_time =
                next.time + (p_.config.refined_pruning ? p_.remaining_chain(next_measured) : 0);
            if (covered(Cost{next.space, lb_time})) {
                return;
            }
        } else {
            std::int64_t delta = static_cast<std::int64_t>(best_space()) - static_cast<std::int64_t>(next.space);
            double pa = accept_probability(delta, p_.n, next_count, p_.config.acceptance);
            if (pa <= 0.0) {
                return;
            }
            double u = static_cast<double>(mix64(child_key ^ 0xd1b54a32d192ed03ULL) >> 11) * 0x1.0p-53;
            if (u >= pa) {
                return;
            }
        }

        Set next_carry = alive;
        next_carry.subtract(m);
        if (!remember(next_measured, next_carry, next)) {
            return;
        }
        path_[depth] = m;
        dfs(next_measured, next_carry, next_count, next.space, next.time, child_key, depth + 1);
    }

    const SearchProblem<Set> &p_;
    SharedFrontier &shared_;
    std::atomic<bool> &stop_;
    std::size_t worker_id_;
    std::vector<Cost> front_;
    std::uint64_t seen_version_ = 0;
    std::vector<Set> path_;
    std::vector<Scratch> scratch_;
    std::unordered_map<Key, std::vector<Cost>, KeyHash> memo_;
    std::uint64_t evaluated_ = 0;
    bool timed_out_ = false;
};

template <class Set>
SearchResult run_search(const Graph &g, const OrderDag &order, const SearchConfig &cfg) {
    auto start = std::chrono::steady_clock::now();
    SearchProblem<Set> problem(g, order, cfg);
    double n = static_cast<double>(g.vertex_count());
    problem.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                   std::chrono::duration<double>(cfg.timeout_scale * n * n));

    ParetoFront seed_front;
    Schedule trivial = trivial_time_optimal(g, order);
    seed_front.insert(cost_of(trivial), trivial);
    SharedFrontier shared(std::move(seed_front));
    std::atomic<bool> stop{false};

    std::vector<SearchWorker<Set>> workers;
    workers.reserve(cfg.workers);
    for (std::size_t w = 0; w < cfg.workers; ++w) {
        workers.emplace_back(problem, shared, stop, w);
    }
    if (cfg.workers == 1) {
        workers[0].run();
    } else {
        std::vector<std::exception_ptr> errors(cfg.workers);
        {
            std::vector<std::jthread> threads;
            for (std::size_t w = 0; w < cfg.workers; ++w) {
                threads.emplace_back([&, w] {
                    try {
                        workers[w].run();
                    } catch (...) {
                        errors[w] = std::current_exception();
                        stop.store(true);
                    }
                });
            }
        }
        for (auto &e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
    }

    SearchResult result;
    result.frontier = shared.take();
    result.seed = cfg.rng_seed;
    for (const auto &w : workers) {
        result.partial = result.partial || w.timed_out();
        result.evaluated += w.evaluated();
    }
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

inline SearchResult dispatch_search(const Graph &g, const OrderDag &order, const SearchConfig &cfg) {
    require_same_vertices(g, order);
    if (cfg.workers == 0) {
        throw std::invalid_argument("search needs at least one worker");
    }
    if (!(cfg.timeout_scale > 0.0)) {
        throw std::invalid_argument("timeout scale must be positive");
    }
    std::size_t n = g.vertex_count();
    if (n == 0) {
        SearchResult r;
        r.frontier.insert(Cost{0, 0}, Schedule{});
        r.seed = cfg.rng_seed;
        return r;
    }
    if (n <= 64) {
        return run_search<FixedBits<1>>(g, order, cfg);
    }
    if (n <= 128) {
        return run_search<FixedBits<2>>(g, order, cfg);
    }
    if (n <= 256) {
        return run_search<FixedBits<4>>(g, order, cfg);
    }
    if (n <= 1024) {
        return run_search<FixedBits<16>>(g, order, cfg);
    }
    return run_search<WordBits>(g, order, cfg);
}

}  // namespace detail

/// Exact Pareto frontier over all schedules built from measurement patterns.
///
/// Depth-first over patterns: each level tries every nonempty subset of the currently
/// measurable vertices, largest first, and discards a branch as soon as a known schedule
/// is at least as good as the branch's best possible completion. The frontier starts
/// from the layer-by-layer schedule. If the budget runs out, the frontier found so far
/// is returned with `partial` set.
inline SearchResult search_exact(const Graph &g, const OrderDag &order, const SearchConfig &cfg) {
    if (cfg.mode != SearchMode::Exact) {
        throw std::invalid_argument("search_exact needs an exact-mode config");
    }
    return detail::dispatch_search(g, order, cfg);
}

/// Same traversal, but a measurement set is only taken when it lowers the space needed
/// so far below the best known space, and then only with accept_probability. Draws are
/// keyed by the branch's path in the tree, so one worker with a fixed seed always gives
/// the same frontier.
inline SearchResult search_approximate(const Graph &g, const OrderDag &order, const SearchConfig &cfg) {
    if (cfg.mode != SearchMode::Approximate) {
        throw std::invalid_argument("search_approximate needs an approximate-mode config");
    }
    return detail::dispatch_search(g, order, cfg);
}

inline SearchResult search(const Graph &g, const OrderDag &order, const SearchConfig &cfg) {
    return detail::dispatch_search(g, order, cfg);
}

}  // namespace pauli_sched
