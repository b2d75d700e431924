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

// Command-line front end. A run that finishes exits 0 even when the search timed out.
// Malformed input exits 2 and a semantic failure such as a cyclic order exits 3.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pauli_sched/pauli_sched.hpp"

namespace ps = pauli_sched;

namespace {

constexpr int kInputError = 2;
constexpr int kSemanticError = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string &path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    return std::string(std::istreambuf_iterator<char>(in), {});
}

ps::Json read_json(const std::string &path) {
    try {
        return ps::Json::parse(read_text(path));
    } catch (const ps::Json::parse_error &e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_text(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw InputError("cannot write '" + path + "'");
    }
}

std::size_t default_workers() {
    if (const char *env = std::getenv("PAULI_SCHED_WORKERS")) {
        try {
            std::size_t w = std::stoul(env);
            if (w > 0) {
                return w;
            }
        } catch (const std::exception &) {
        }
        std::cerr << "warning: ignoring PAULI_SCHED_WORKERS='" << env << "'\n";
    }
    return 1;
}

// ---------------------------------------------------------------- track

struct TrackArgs {
    std::string circuit;
    bool live = false;
    std::string backend = "words";
    std::string out;
};

template <class Tracker>
ps::FrameTable track_with(const ps::Circuit &c) {
    Tracker t;
    try {
        ps::run_circuit(t, std::span<const ps::Instruction>(c.instructions));
    } catch (const ps::CircuitError &e) {
        std::string what = e.what();
        throw InputError("line " + std::to_string(c.lines.at(e.position())) + ": " +
                         what.substr(what.find(": ") + 2));
    }
    return ps::snapshot(t);
}

int cmd_track(const TrackArgs &a) {
    ps::Circuit c;
    try {
        c = ps::parse_circuit(read_text(a.circuit));
    } catch (const ps::CircuitParseError &e) {
        throw InputError(e.what());
    }
    ps::FrameTable t;
    if (a.live) {
        t = track_with<ps::LiveFrame>(c);
    } else if (a.backend == "bytes") {
        t = track_with<ps::Frames<ps::ByteBits>>(c);
    } else {
        t = track_with<ps::Frames<ps::WordBits>>(c);
    }
    write_text(a.out, ps::frames_to_json(t).dump() + "\n");
    return 0;
}

// ---------------------------------------------------------------- order

struct OrderArgs {
    std::string frames;
    std::string graph;
    std::optional<std::size_t> n;
    std::string out;
};

ps::OrderDag order_for(const ps::FrameTable &t, std::optional<std::size_t> n) {
    try {
        return n ? ps::order_from_frames(t, *n) : ps::order_from_frames(t);
    } catch (const ps::CycleError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
    }
}

int cmd_order(const OrderArgs &a) {
    ps::FrameTable t = ps::frames_from_json(read_json(a.frames));
    std::optional<std::size_t> n = a.n;
    if (!a.graph.empty()) {
        n = ps::graph_from_json(read_json(a.graph)).vertex_count();
    }
    write_text(a.out, ps::order_to_json(order_for(t, n)).dump() + "\n");
    return 0;
}

// ---------------------------------------------------------------- schedule

struct ProblemArgs {
    std::string graph;
    std::string order;
    std::string frames;
};

struct Problem {
    ps::Graph graph;
    ps::OrderDag order;
};

Problem load_problem(const ProblemArgs &a) {
    Problem p;
    p.graph = ps::graph_from_json(read_json(a.graph));
    std::size_t n = p.graph.vertex_count();
    if (!a.order.empty()) {
        p.order = ps::order_from_json(read_json(a.order), n);
    } else if (!a.frames.empty()) {
        p.order = order_for(ps::frames_from_json(read_json(a.frames)), n);
    } else {
        p.order = ps::OrderDag(n);
    }
    return p;
}

struct ScheduleArgs {
    ProblemArgs problem;
    bool exact = false;
    bool approximate = false;
    bool trivial = false;
    std::uint64_t seed = 0;
    std::size_t workers = 1;
    double timeout_scale = 0.05;
    bool plain_pruning = false;
    std::string out;
};

int cmd_schedule(const ScheduleArgs &a) {
    Problem p = load_problem(a.problem);
    ps::SearchResult r;
    if (a.trivial) {
        auto start = std::chrono::steady_clock::now();
        ps::Schedule s = ps::trivial_time_optimal(p.graph, p.order);
        ps::Cost c = ps::cost_of(s);
        r.frontier.insert(c, std::move(s));
        r.seed = a.seed;
        r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    } else {
        ps::SearchConfig cfg;
        cfg.mode = a.approximate ? ps::SearchMode::Approximate : ps::SearchMode::Exact;
        cfg.rng_seed = a.seed;
        cfg.workers = a.workers;
        cfg.timeout_scale = a.timeout_scale;
        cfg.refined_pruning = !a.plain_pruning;
        r = ps::search(p.graph, p.order, cfg);
    }
    write_text(a.out, ps::frontier_to_json(r).dump() + "\n");
    return 0;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
    std::string spec;
    ps::InstanceSpec inst;
    std::string graph_out;
    std::string frames_out;
};

int cmd_gen(GenArgs a) {
    if (!a.spec.empty()) {
        a.inst = ps::instance_spec_from_json(read_json(a.spec));
    }
    ps::Instance inst;
    try {
        inst = ps::generate_instance(a.inst);
    } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
    }
    ps::Json graph = ps::graph_to_json(inst.graph);
    ps::Json frames = ps::frames_to_json(inst.frames);
    if (a.graph_out.empty() && a.frames_out.empty()) {
        ps::Json both = {{"spec", ps::instance_spec_to_json(a.inst)}, {"graph", graph}, {"frames", frames}};
        write_text("", both.dump() + "\n");
        return 0;
    }
    if (!a.graph_out.empty()) {
        write_text(a.graph_out, graph.dump() + "\n");
    }
    if (!a.frames_out.empty()) {
        write_text(a.frames_out, frames.dump() + "\n");
    }
    return 0;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
    std::string spec;
    std::vector<std::size_t> ns;
    std::vector<double> pes;
    std::vector<double> pcs;
    std::size_t samples = 1;
    std::vector<std::string> modes{"trivial_time"};
    std::uint64_t seed = 0;
    double timeout_scale = 0.05;
    std::size_t workers = 1;
    bool plain_pruning = false;
    std::string out;
};

int cmd_sweep(const SweepArgs &a, const CLI::App &sub) {
    ps::SweepSpec spec;
    if (!a.spec.empty()) {
        spec = ps::sweep_spec_from_json(read_json(a.spec));
    }
    // Flags given on the command line override the values read from --spec.
    if (!a.ns.empty()) {
        spec.ns = a.ns;
    }
    if (!a.pes.empty()) {
        spec.pes = a.pes;
    }
    if (!a.pcs.empty()) {
        spec.pcs = a.pcs;
    }
    if (a.spec.empty() || sub.count("--samples")) {
        spec.samples = a.samples;
    }
    if (a.spec.empty() || sub.count("--modes")) {
        spec.modes.clear();
        for (const auto &m : a.modes) {
            try {
                spec.modes.push_back(ps::sweep_mode_from_name(m));
            } catch (const std::invalid_argument &e) {
                throw InputError(e.what());
            }
        }
    }
    if (a.spec.empty() || sub.count("--seed")) {
        spec.seed = a.seed;
    }
    if (a.spec.empty() || sub.count("--timeout-scale")) {
        spec.timeout_scale = a.timeout_scale;
    }
    spec.workers = a.workers;
    spec.refined_pruning = !a.plain_pruning;
    std::vector<ps::SweepRow> rows;
    try {
        rows = ps::run_sweep(spec);
    } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
    }
    std::ostringstream csv;
    ps::write_sweep_csv(csv, rows);
    write_text(a.out, csv.str());
    return 0;
}

// ---------------------------------------------------------------- validate

struct ValidateArgs {
    ProblemArgs problem;
    std::string schedule;
};

int cmd_validate(const ValidateArgs &a) {
    Problem p = load_problem(a.problem);
    ps::Json doc = read_json(a.schedule);
    ps::Schedule s = ps::schedule_from_json(doc);
    ps::Cost real = ps::cost_of(s);
    ps::Json report;
    int code = 0;
    if (auto v = ps::validate_schedule(p.graph, p.order, s)) {
        report = {{"valid", false}, {"condition", v->condition}, {"step", v->step}, {"detail", v->detail}};
        code = kSemanticError;
    } else if (auto claimed = ps::claimed_cost(doc); claimed && !(*claimed == real)) {
        report = {{"valid", false},
                  {"detail", "stated cost (" + std::to_string(claimed->space) + ", " +
                                 std::to_string(claimed->time) + ") differs from the actual cost"}};
        code = kSemanticError;
    } else {
        report = {{"valid", true}};
    }
    report["space"] = real.space;
    report["time"] = real.time;
    std::cout << report.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Pauli frame tracking and MBQC measurement scheduling"};
    app.require_subcommand(1);

    TrackArgs track;
    auto *t = app.add_subcommand("track", "Track a circuit file and print the frames as JSON");
    t->add_option("circuit", track.circuit, "Circuit file ('-' for stdin)")->required();
    t->add_flag("--live", track.live, "Single-frame runtime tracker (Pauli gates need no frame)");
    t->add_option("--backend", track.backend, "Bit storage of the multi-frame tracker")
        ->check(CLI::IsMember({"bytes", "words"}));
    t->add_option("-o,--output", track.out, "Output file (default stdout)");

    OrderArgs order;
    auto *o = app.add_subcommand("order", "Extract the measurement order from frames JSON");
    o->add_option("frames", order.frames, "Frames JSON file")->required();
    auto *order_graph = o->add_option("--graph", order.graph, "Graph JSON fixing the vertex count");
    o->add_option("--n", order.n, "Vertex count (default: one past the largest id)")->excludes(order_graph);
    o->add_option("-o,--output", order.out, "Output file (default stdout)");

    std::size_t workers = default_workers();

    ScheduleArgs sched;
    sched.workers = workers;
    auto *s = app.add_subcommand("schedule", "Search measurement schedules and print the frontier JSON");
    s->add_option("--graph", sched.problem.graph, "Graph JSON")->required();
    auto *s_order = s->add_option("--order", sched.problem.order, "Order JSON");
    s->add_option("--frames", sched.problem.frames, "Frames JSON (order extracted from it)")->excludes(s_order);
    auto *f_exact = s->add_flag("--exact", sched.exact, "Exact Pareto frontier (default)");
    auto *f_approx = s->add_flag("--approximate", sched.approximate, "Probabilistic space-optimising search");
    auto *f_trivial = s->add_flag("--trivial-time", sched.trivial, "Layer-by-layer time-optimal schedule only");
    f_exact->excludes(f_approx)->excludes(f_trivial);
    f_approx->excludes(f_trivial);
    s->add_option("--seed", sched.seed, "RNG seed for the approximate search");
    s->add_option("--workers", sched.workers, "Search threads (default $PAULI_SCHED_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
    s->add_option("--timeout-scale", sched.timeout_scale, "Budget is this many seconds times |V|^2")
        ->check(CLI::PositiveNumber);
    s->add_flag("--paper-faithful-pruning", sched.plain_pruning,
                "Prune on costs so far only (no chain bound, no free-vertex closure)");
    s->add_option("-o,--output", sched.out, "Output file (default stdout)");

    GenArgs gen;
    auto *g = app.add_subcommand("gen", "Generate a random instance (graph and frames)");
    auto *g_spec = g->add_option("--spec", gen.spec, "Instance spec JSON {n, pe, pc, seed}");
    g->add_option("--n", gen.inst.n, "Vertex count")->excludes(g_spec);
    g->add_option("--pe", gen.inst.p_edge, "Edge density")->excludes(g_spec);
    g->add_option("--pc", gen.inst.p_correction, "Correction density")->excludes(g_spec);
    g->add_option("--seed", gen.inst.seed, "Seed")->excludes(g_spec);
    g->add_option("--graph-out", gen.graph_out, "Write the graph JSON here");
    g->add_option("--frames-out", gen.frames_out, "Write the frames JSON here");

    SweepArgs sweep;
    sweep.workers = workers;
    auto *w = app.add_subcommand("sweep", "Run a seeded experiment grid and print CSV rows");
    w->add_option("--spec", sweep.spec, "Sweep spec JSON {ns, pes, pcs, samples, modes, seed, timeout_scale}");
    w->add_option("--n", sweep.ns, "Vertex counts")->delimiter(',');
    w->add_option("--pe", sweep.pes, "Edge densities")->delimiter(',');
    w->add_option("--pc", sweep.pcs, "Correction densities")->delimiter(',');
    w->add_option("--samples", sweep.samples, "Samples per cell");
    w->add_option("--modes", sweep.modes, "trivial_time, exact, approximate")->delimiter(',');
    w->add_option("--seed", sweep.seed, "Root seed");
    w->add_option("--timeout-scale", sweep.timeout_scale, "Per-search budget scale")->check(CLI::PositiveNumber);
    w->add_option("--workers", sweep.workers, "Threads running samples")->check(CLI::PositiveNumber);
    w->add_flag("--paper-faithful-pruning", sweep.plain_pruning, "Prune on costs so far only");
    w->add_option("-o,--output", sweep.out, "Output file (default stdout)");

    ValidateArgs val;
    auto *v = app.add_subcommand("validate", "Check a schedule JSON against graph and order");
    v->add_option("--graph", val.problem.graph, "Graph JSON")->required();
    auto *v_order = v->add_option("--order", val.problem.order, "Order JSON");
    v->add_option("--frames", val.problem.frames, "Frames JSON")->excludes(v_order);
    v->add_option("schedule", val.schedule, "Schedule JSON (a frontier entry's \"schedule\")")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*t) {
            return cmd_track(track);
        }
        if (*o) {
            return cmd_order(order);
        }
        if (*s) {
            return cmd_schedule(sched);
        }
        if (*g) {
            return cmd_gen(gen);
        }
        if (*w) {
            return cmd_sweep(sweep, *w);
        }
        if (*v) {
            return cmd_validate(val);
        }
    } catch (const ps::CycleError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSemanticError;
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const ps::FormatError &e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
