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

#include <gtest/gtest.h>

#include <sstream>

#include "pauli_sched/sweep.hpp"

using namespace pauli_sched;

namespace {

SweepSpec small_spec() {
    SweepSpec s;
    s.ns = {6, 8};
    s.pes = {0.2, 0.5};
    s.pcs = {0.0, 0.4};
    s.samples = 3;
    s.modes = {SweepMode::TrivialTime, SweepMode::Exact, SweepMode::Approximate};
    s.seed = 11;
    s.timeout_scale = 1.0;
    return s;
}

std::string without_wall_seconds(const std::vector<SweepRow> &rows) {
    std::ostringstream out;
    for (SweepRow r : rows) {
        r.wall_seconds = 0.0;
        out << format_sweep_row(r) << '\n';
    }
    return out.str();
}

}  // namespace

TEST(Sweep, RowsInGridOrder) {
    auto rows = run_sweep(small_spec());
    // 8 cells x 3 samples x (1 + 2 + 2) rows.
    ASSERT_EQ(rows.size(), 8u * 3u * 5u);
    EXPECT_EQ(rows[0].n, 6u);
    EXPECT_EQ(rows[0].mode, "trivial_time");
    EXPECT_EQ(rows[1].mode, "exact_time");
    EXPECT_EQ(rows[2].mode, "exact_space");
    EXPECT_EQ(rows[3].mode, "approximate_time");
    EXPECT_EQ(rows[4].mode, "approximate_space");
    EXPECT_EQ(rows.back().n, 8u);
    EXPECT_EQ(rows.back().pc, 0.4);
    for (const auto &r : rows) {
        if (r.pc == 0.0 && r.mode == "trivial_time") {
            EXPECT_EQ(r.time, 1u);
        }
        EXPECT_FALSE(r.partial);
    }
    EXPECT_EQ(rows[0].seed, sweep_sample_seed(11, 0, 0));
    EXPECT_EQ(rows[5].seed, sweep_sample_seed(11, 0, 1));
}

TEST(Sweep, DeterministicAcrossRunsAndThreads) {
    SweepSpec s = small_spec();
    std::string a = without_wall_seconds(run_sweep(s));
    std::string b = without_wall_seconds(run_sweep(s));
    s.workers = 3;
    std::string c = without_wall_seconds(run_sweep(s));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
}

TEST(Sweep, CsvFormat) {
    SweepSpec s;
    s.ns = {4};
    s.pes = {0.5};
    s.pcs = {0.5};
    std::ostringstream out;
    write_sweep_csv(out, run_sweep(s));
    std::istringstream in(out.str());
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    EXPECT_EQ(header, "n,pe,pc,seed,mode,space,time,wall_seconds,partial");
    EXPECT_EQ(row.rfind("4,0.5,0.5,", 0), 0u);
    EXPECT_NE(row.find(",trivial_time,"), std::string::npos);
    EXPECT_EQ(row.substr(row.size() - 5), "false");
}

TEST(Sweep, RejectsBadSpecs) {
    SweepSpec s = small_spec();
    s.samples = 0;
    EXPECT_THROW(run_sweep(s), std::invalid_argument);
    s = small_spec();
    s.pes.clear();
    EXPECT_THROW(run_sweep(s), std::invalid_argument);
    s = small_spec();
    s.modes.clear();
    EXPECT_THROW(run_sweep(s), std::invalid_argument);
    s = small_spec();
    s.pcs = {1.5};
    EXPECT_THROW(run_sweep(s), std::invalid_argument);
}
