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
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "pauli_sched/instances.hpp"
#include "pauli_sched/json_io.hpp"
#include "pauli_sched/order.hpp"
#include "pauli_sched/random.hpp"
#include "pauli_sched/schedule.hpp"
#include "pauli_sched/search.hpp"

namespace pauli_sched {

enum class SweepMode { TrivialTime, Exact, Approximate };

inline const char *sweep_mode_name(SweepMode m) {
    switch (m) {
        case SweepMode::TrivialTime:
            return "trivial_time";
        case SweepMode::Exact:
            return "exact";
        case SweepMode::Approximate:
            return "approximate";
    }
    return "?";
}

inline SweepMode sweep_mode_from_name(const std::string &s) {
    if (s == "trivial_time") {
        return SweepMode::TrivialTime;
    }
    if (s == "exact") {
        return SweepMode::Exact;
    }
    if (s == "approximate") {
        return SweepMode::Approximate;
    }
    throw std::invalid_argument("unknown sweep mode '" + s + "'");
}

struct SweepSpec {
    std::vector<std::size_t> ns;
    std::vector<double> pes;
    std::vector<double> pcs;
    std::size_t samples = 1;
    std::vector<SweepMode> modes{SweepMode::TrivialTime};
    std::uint64_t seed = 0;
    double timeout_scale = 0.05;
    /// Threads running independent samples. Each search itself is single-threaded, so
    /// rows do not depend on this value (except through timeouts).
    std::size_t workers = 1;
    bool refined_pruning = true;
};

/// One CSV row. The search modes report both frontier endpoints, so `mode` is one of
/// trivial_time, exact_time, exact_space, approximate_time, approximate_space.
struct SweepRow {
    std::size_t n = 0;
    double pe = 0.0;
    double pc = 0.0;
    std::uint64_t seed = 0;
    std::string mode;
    std::size_t space = 0;
    std::size_t time = 0;
    double wall_seconds = 0.0;
    bool partial = false;
};

inline void check_sweep_spec(const SweepSpec &spec) {
    if (spec.ns.empty() || spec.pes.empty() || spec.pcs.empty()) {
        throw std::invalid_argument("sweep grid is empty");
    }
    if (spec.samples == 0) {
        throw std::invalid_argument("sweep needs at least one sample per cell");
    }
    if (spec.modes.empty()) {
        throw std::invalid_argument("sweep needs at least one mode");
    }
    if (spec.workers == 0) {
        throw std::invalid_argument("sweep needs at least one worker");
    }
    for (std::size_t n : spec.ns) {
        if (n == 0) {
            throw std::invalid_argument("sweep sizes must be positive");
        }
    }
    for (const auto *grid : {&spec.pes, &spec.pcs}) {
        for (double p : *grid) {
            if (!(p >= 0.0 && p <= 1.0)) {
                throw std::invalid_argument("sweep probabilities must lie in [0, 1]");
            }
        }
    }
}

/// Seed of sample `sample` in grid cell `cell` (cells enumerated n-major, then p_e, then p_c).
inline std::uint64_t sweep_sample_seed(std::uint64_t root, std::size_t cell, std::size_t sample) {
    return derive_seed(derive_seed(root, cell), sample);
}

namespace detail {

inline constexpr std::uint64_t kSearchStream = 3;

inline std::vector<SweepRow> run_sweep_sample(const SweepSpec &spec, const InstanceSpec &inst) {
    Instance instance = generate_instance(inst);
    OrderDag order = order_from_frames(instance.frames, inst.n);
    std::vector<SweepRow> rows;
    auto row = [&](const char *mode, Cost c, double wall, bool partial) {
        rows.push_back(SweepRow{inst.n, inst.p_edge, inst.p_correction, inst.seed, mode, c.space, c.time,
                                wall, partial});
    };
    for (SweepMode m : spec.modes) {
        if (m == SweepMode::TrivialTime) {
            auto start = std::chrono::steady_clock::now();
            Cost c = cost_of(trivial_time_optimal(instance.graph, order));
            row("trivial_time", c,
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), false);
            continue;
        }
        SearchConfig cfg;
        cfg.mode = m == SweepMode::Exact ? SearchMode::Exact : SearchMode::Approximate;
        cfg.timeout_scale = spec.timeout_scale;
        cfg.rng_seed = derive_seed(inst.seed, kSearchStream);
        cfg.refined_pruning = spec.refined_pruning;
        SearchResult r = search(instance.graph, order, cfg);
        bool exact = m == SweepMode::Exact;
        row(exact ? "exact_time" : "approximate_time", r.frontier.min_time()->cost, r.wall_seconds, r.partial);
        row(exact ? "exact_space" : "approximate_space", r.frontier.min_space()->cost, r.wall_seconds,
            r.partial);
    }
    return rows;
}

}  // namespace detail

/// Runs every (cell, sample) pair and returns the rows in grid order, whatever order the
/// worker threads finish in.
inline std::vector<SweepRow> run_sweep(const SweepSpec &spec) {
    check_sweep_spec(spec);
    std::vector<InstanceSpec> jobs;
    std::size_t cell = 0;
    for (std::size_t n : spec.ns) {
        for (double pe : spec.pes) {
            for (double pc : spec.pcs) {
                for (std::size_t s = 0; s < spec.samples; ++s) {
                    jobs.push_back(InstanceSpec{n, pe, pc, sweep_sample_seed(spec.seed, cell, s)});
                }
                ++cell;
            }
        }
    }

    std::vector<std::vector<SweepRow>> results(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    auto drain = [&] {
        for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
            try {
                results[j] = detail::run_sweep_sample(spec, jobs[j]);
            } catch (...) {
                errors[j] = std::current_exception();
            }
        }
    };
    std::size_t threads = std::min(spec.workers, jobs.size());
    if (threads <= 1) {
        drain();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back(drain);
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    std::vector<SweepRow> rows;
    for (auto &r : results) {
        rows.insert(rows.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    }
    return rows;
}

inline constexpr const char *kSweepHeader = "n,pe,pc,seed,mode,space,time,wall_seconds,partial";

inline std::string format_sweep_row(const SweepRow &r) {
    std::ostringstream out;
    out << r.n << ',' << r.pe << ',' << r.pc << ',' << r.seed << ',' << r.mode << ',' << r.space << ','
        << r.time << ',' << std::fixed << std::setprecision(6) << r.wall_seconds << ','
        << (r.partial ? "true" : "false");
    return out.str();
}

inline void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    out << kSweepHeader << '\n';
    for (const SweepRow &r : rows) {
        out << format_sweep_row(r) << '\n';
    }
}

/// {"ns": [..], "pes": [..], "pcs": [..], "samples": k, "modes": [..], "seed": s,
///  "timeout_scale": c}; everything but the grid is optional.
inline SweepSpec sweep_spec_from_json(const Json &j) {
    SweepSpec spec;
    auto numbers = [&](const char *key) {
        const Json &a = detail::field(j, key);
        if (!a.is_array()) {
            throw FormatError(std::string("'") + key + "' must be an array");
        }
        std::vector<double> out;
        for (const Json &v : a) {
            if (!v.is_number()) {
                throw FormatError(std::string("'") + key + "' must hold numbers");
            }
            out.push_back(v.get<double>());
        }
        return out;
    };
    const Json &ns = detail::field(j, "ns");
    if (!ns.is_array()) {
        throw FormatError("'ns' must be an array");
    }
    for (const Json &v : ns) {
        spec.ns.push_back(detail::as_uint<std::size_t>(v, "n"));
    }
    spec.pes = numbers("pes");
    spec.pcs = numbers("pcs");
    if (j.contains("samples")) {
        spec.samples = detail::as_uint<std::size_t>(j.at("samples"), "samples");
    }
    if (j.contains("modes")) {
        spec.modes.clear();
        for (const Json &m : j.at("modes")) {
            if (!m.is_string()) {
                throw FormatError("'modes' must hold strings");
            }
            try {
                spec.modes.push_back(sweep_mode_from_name(m.get<std::string>()));
            } catch (const std::invalid_argument &e) {
                throw FormatError(e.what());
            }
        }
    }
    if (j.contains("seed")) {
        spec.seed = detail::as_uint<std::uint64_t>(j.at("seed"), "seed");
    }
    if (j.contains("timeout_scale")) {
        if (!j.at("timeout_scale").is_number()) {
            throw FormatError("'timeout_scale' must be a number");
        }
        spec.timeout_scale = j.at("timeout_scale").get<double>();
    }
    return spec;
}

}  // namespace pauli_sched
