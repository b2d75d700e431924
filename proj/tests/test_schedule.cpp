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

#include <vector>

#include "oracle/brute_force.hpp"
#include "pauli_sched/pareto.hpp"
#include "pauli_sched/schedule.hpp"
#include "support/cases.hpp"

using namespace pauli_sched;

namespace {

Graph path3() {
    return Graph(3, std::vector<Edge>{{0, 1}, {1, 2}});
}
Graph triangle() {
    return Graph(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
}
OrderDag chain3() {
    return OrderDag::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
}

}  // namespace

TEST(Graph, RejectsNonSimple) {
    EXPECT_THROW(Graph(2, std::vector<Edge>{{0, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(2, std::vector<Edge>{{0, 1}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(2, std::vector<Edge>{{0, 2}}), std::invalid_argument);
    Graph g = path3();
    EXPECT_EQ(g.neighbors(1), (VertexList{0, 2}));
    EXPECT_TRUE(g.has_edge(2, 1));
    EXPECT_FALSE(g.has_edge(0, 2));
    EXPECT_EQ(g.edge_count(), 2u);
}

TEST(ScheduleFromPattern, Examples) {
    Schedule s = schedule_from_pattern(path3(), OrderDag(3), {{0}, {1}, {2}});
    ASSERT_EQ(s.steps.size(), 3u);
    EXPECT_EQ(s.steps[0].alive, (VertexList{0, 1}));
    EXPECT_EQ(s.steps[1].alive, (VertexList{1, 2}));
    EXPECT_EQ(s.steps[2].alive, (VertexList{2}));
    EXPECT_EQ(cost_of(s), (Cost{2, 3}));

    Schedule all = schedule_from_pattern(path3(), OrderDag(3), {{0, 1, 2}});
    EXPECT_EQ(cost_of(all), (Cost{3, 1}));

    Schedule tri = schedule_from_pattern(triangle(), OrderDag(3), {{0}, {1}, {2}});
    EXPECT_EQ(tri.steps[0].alive, (VertexList{0, 1, 2}));
    EXPECT_EQ(tri.steps[1].alive, (VertexList{1, 2}));
    EXPECT_EQ(tri.steps[2].alive, (VertexList{2}));
    EXPECT_EQ(cost_of(tri), (Cost{3, 3}));
}

TEST(ScheduleFromPattern, InvalidPatterns) {
    auto index_of = [](const Pattern &p) -> std::size_t {
        try {
            schedule_from_pattern(path3(), chain3(), p);
        } catch (const InvalidPattern &e) {
            return e.index();
        }
        return 0;
    };
    EXPECT_EQ(index_of({{1}, {0}, {2}}), 1u);
    EXPECT_EQ(index_of({{0}, {}, {1, 2}}), 2u);
    EXPECT_EQ(index_of({{0}, {1}}), 2u);
    EXPECT_EQ(index_of({{0}, {1}, {2, 2}}), 3u);
    EXPECT_EQ(index_of({{0}, {1}, {2}}), 0u);
    EXPECT_THROW(schedule_from_pattern(path3(), OrderDag(4), {{0, 1, 2, 3}}), std::invalid_argument);
}

TEST(ValidateSchedule, Violations) {
    Schedule bad1{{{{0}, {0}}, {{1, 2}, {1, 2}}}};
    auto v = validate_schedule(path3(), OrderDag(3), bad1);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->condition, 1);
    EXPECT_EQ(v->step, 1u);

    Schedule missing{{{{0}, {0, 1}}, {{1}, {1, 2}}}};
    v = validate_schedule(path3(), OrderDag(3), missing);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->condition, 3);

    Schedule order{{{{1}, {0, 1, 2}}, {{0, 2}, {0, 2}}}};
    v = validate_schedule(path3(), chain3(), order);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->condition, 2);

    // 2 was alive in step 1 but is dropped in step 2 before being measured.
    Schedule dropped{{{{0}, {0, 1, 2}}, {{1}, {1}}, {{2}, {2}}}};
    v = validate_schedule(path3(), OrderDag(3), dropped);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->condition, 1);
    Schedule dropped2{{{{0}, {0, 1, 2}}, {{1}, {1, 2}}, {{2}, {}}}};
    v = validate_schedule(path3(), OrderDag(3), dropped2);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->condition, 1);
    Schedule revived{{{{0}, {0, 1}}, {{1}, {0, 1, 2}}, {{2}, {2}}}};
    v = validate_schedule(path3(), OrderDag(3), revived);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->condition, 4);
    EXPECT_EQ(v->step, 2u);
    Schedule twice{{{{0}, {0, 1}}, {{0, 1}, {1, 2}}, {{2}, {2}}}};
    v = validate_schedule(path3(), OrderDag(3), twice);
    ASSERT_TRUE(v.has_value());

    Schedule carry_lost{{{{0}, {0, 1, 2}}, {{2}, {1, 2}}, {{1}, {1}}}};
    EXPECT_FALSE(validate_schedule(path3(), OrderDag(3), carry_lost).has_value());
    Schedule carry_lost2{{{{0}, {0, 1, 2}}, {{1}, {1}}, {{2}, {2}}}};
    v = validate_schedule(Graph(3), OrderDag(3), carry_lost2);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->condition, 4);
}

TEST(Cost, Examples) {
    EXPECT_EQ(cost_of(Schedule{}), (Cost{0, 0}));
    std::vector<Vertex> all(20);
    for (Vertex v = 0; v < 20; ++v) {
        all[v] = v;
    }
    EXPECT_EQ(cost_of(Schedule{{{all, all}}}), (Cost{20, 1}));
    EXPECT_TRUE(dominates({2, 2}, {2, 3}));
    EXPECT_FALSE(dominates({2, 2}, {2, 2}));
    EXPECT_TRUE(weakly_dominates({2, 2}, {2, 2}));
    EXPECT_FALSE(weakly_dominates({1, 3}, {2, 2}));
}

TEST(TrivialTimeOptimal, Examples) {
    EXPECT_EQ(pattern_of(trivial_time_optimal(path3(), OrderDag(3))), (Pattern{{0, 1, 2}}));
    EXPECT_EQ(pattern_of(trivial_time_optimal(path3(), chain3())), (Pattern{{0}, {1}, {2}}));
    OrderDag fork = OrderDag::from_edges(3, std::vector<Edge>{{0, 1}, {0, 2}});
    Schedule s = trivial_time_optimal(path3(), fork);
    EXPECT_EQ(pattern_of(s), (Pattern{{0}, {1, 2}}));
    EXPECT_EQ(cost_of(s).time, 2u);
}

TEST(TrivialTimeOptimal, LongestChainAndGraphInvariance) {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        unsigned n = 1 + seed % 12;
        oracle::Problem p = cases::random_problem(seed, n, 0.4, 0.25);
        OrderDag o = cases::order_of(p);
        Schedule s = trivial_time_optimal(cases::graph_of(p), o);
        EXPECT_EQ(cost_of(s).time, oracle::longest_chain(p));
        EXPECT_FALSE(validate_schedule(cases::graph_of(p), o, s).has_value());
        oracle::Problem q = cases::random_problem(seed + 7777, n, 0.7, 0.0);
        q.order_edges = p.order_edges;
        EXPECT_EQ(cost_of(trivial_time_optimal(cases::graph_of(q), o)).time, cost_of(s).time);
    }
}

TEST(ScheduleFromPattern, SoundAndMatchesOracle) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        unsigned n = 1 + seed % 9;
        oracle::Problem p = cases::random_problem(seed, n, 0.1 * (seed % 10), 0.05 * (seed % 7));
        Graph g = cases::graph_of(p);
        OrderDag o = cases::order_of(p);
        Pattern pat = cases::random_pattern(seed * 31 + 1, o);
        Schedule s = schedule_from_pattern(g, o, pat);
        EXPECT_FALSE(validate_schedule(g, o, s).has_value()) << "seed " << seed;
        auto expect = oracle::minimal_alive(p, cases::to_oracle(pat));
        ASSERT_EQ(s.steps.size(), expect.size());
        for (std::size_t i = 0; i < expect.size(); ++i) {
            EXPECT_EQ(s.steps[i].alive, VertexList(expect[i].begin(), expect[i].end()));
        }
    }
}

TEST(ScheduleFromPattern, MinimalAmongValidAlives) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        unsigned n = 2 + seed % 4;
        oracle::Problem p = cases::random_problem(seed, n, 0.5, 0.2);
        Graph g = cases::graph_of(p);
        OrderDag o = cases::order_of(p);
        Pattern pat = cases::random_pattern(seed + 99, o);
        Schedule s = schedule_from_pattern(g, o, pat);
        std::size_t families = 0;
        oracle::for_each_valid_alive(p, cases::to_oracle(pat), [&](const std::vector<oracle::VSet> &alive) {
            ++families;
            Schedule other;
            for (std::size_t i = 0; i < alive.size(); ++i) {
                other.steps.push_back({pat[i], VertexList(alive[i].begin(), alive[i].end())});
                for (Vertex v : s.steps[i].alive) {
                    EXPECT_TRUE(alive[i].count(v)) << "seed " << seed;
                }
            }
            EXPECT_FALSE(validate_schedule(g, o, other).has_value());
        });
        EXPECT_GE(families, 1u);
    }
}

TEST(ParetoFront, InsertKeepsDominanceFree) {
    ParetoFront f;
    EXPECT_TRUE(f.insert({3, 1}, {}));
    EXPECT_TRUE(f.insert({2, 3}, {}));
    EXPECT_FALSE(f.insert({3, 3}, {}));
    EXPECT_FALSE(f.insert({2, 3}, {}));
    EXPECT_TRUE(f.insert({2, 2}, {}));
    EXPECT_EQ(f.costs(), (std::vector<Cost>{{3, 1}, {2, 2}}));
    EXPECT_EQ(f.min_time()->cost, (Cost{3, 1}));
    EXPECT_EQ(f.min_space()->cost, (Cost{2, 2}));
    EXPECT_TRUE(f.insert({1, 1}, {}));
    EXPECT_EQ(f.size(), 1u);
}
