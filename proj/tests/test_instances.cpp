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

#include <cmath>
#include <numeric>
#include <vector>

#include "pauli_sched/instances.hpp"
#include "pauli_sched/order.hpp"
#include "pauli_sched/random.hpp"

using namespace pauli_sched;

namespace {

bool connected(const Graph &g) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == g.vertex_count();
}

std::size_t unreduced_order_edges(const FrameTable &t) {
    std::size_t edges = 0;
    for (std::size_t f = 0; f < t.frame_count; ++f) {
        for (const auto &[q, s] : t.stacks) {
            if ((s.z[f] || s.x[f]) && q != t.origins.at(f)) {
                ++edges;
            }
        }
    }
    return edges;
}

}  // namespace

TEST(SplitMix64, KnownSequence) {
    // Reference values of the public SplitMix64 generator for seed 0.
    SplitMix64 rng(0);
    EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
    EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
    EXPECT_EQ(rng.next(), 0x06c45d188009454fULL);
    SplitMix64 r2(7);
    for (int i = 0; i < 1000; ++i) {
        double u = r2.uniform01();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
        EXPECT_LT(r2.below(5), 5u);
    }
    EXPECT_NE(derive_seed(1, 1), derive_seed(1, 2));
    EXPECT_NE(derive_seed(1, 1), derive_seed(2, 1));
}

TEST(RandomGraph, Extremes) {
    EXPECT_EQ(random_graph({10, 0.0, 0.0, 1}).edge_count(), 0u);
    EXPECT_EQ(random_graph({10, 1.0, 0.0, 1}).edge_count(), 45u);
    EXPECT_EQ(random_graph({1, 1.0, 0.0, 1}).edge_count(), 0u);
    EXPECT_THROW(random_graph({0, 0.5, 0.5, 1}), std::invalid_argument);
    EXPECT_THROW(random_graph({5, 1.5, 0.5, 1}), std::invalid_argument);
    EXPECT_THROW(random_graph({5, 0.5, -0.1, 1}), std::invalid_argument);
}

TEST(RandomGraph, BinomialEdgeCount) {
    Graph g = random_graph({1000, 0.5, 0.0, 123});
    double trials = 1000.0 * 999.0 / 2.0;
    double mean = 0.5 * trials;
    double sigma = std::sqrt(trials * 0.25);
    EXPECT_LT(std::abs(static_cast<double>(g.edge_count()) - mean), 5.0 * sigma);
}

TEST(RandomFrames, Extremes) {
    FrameTable none = random_frames({12, 0.3, 0.0, 5});
    EXPECT_EQ(none.frame_count, 12u);
    EXPECT_TRUE(order_from_frames(none, 12).edges().empty());

    FrameTable all = random_frames({12, 0.3, 1.0, 5});
    EXPECT_EQ(unreduced_order_edges(all), 66u);
    OrderDag o = order_from_frames(all, 12);
    EXPECT_EQ(o.depth(), 12u);
    EXPECT_EQ(o.edges().size(), 11u);
    // The chain follows the frame origins in creation order.
    for (std::size_t f = 0; f + 1 < 12; ++f) {
        EXPECT_EQ(o.layer_of(static_cast<Vertex>(all.origins.at(f))), f);
    }
}

TEST(RandomFrames, ExpectedOrderEdges) {
    double total = 0.0;
    const int samples = 400;
    for (int s = 0; s < samples; ++s) {
        total += static_cast<double>(unreduced_order_edges(random_frames({20, 0.0, 0.5, std::uint64_t(s)})));
    }
    double mean = total / samples;
    // Binomial(190, 0.5): per-sample sigma ~6.9, so the mean's sigma is ~0.34.
    EXPECT_NEAR(mean, 95.0, 2.0);
}

TEST(RandomFrames, OrdersAreAcyclicAndCorrectionsAreXOrZ) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        FrameTable t = random_frames({15, 0.0, 0.4, seed});
        EXPECT_NO_THROW(order_from_frames(t, 15));
        for (const auto &[q, s] : t.stacks) {
            for (std::size_t f = 0; f < t.frame_count; ++f) {
                EXPECT_FALSE(s.z[f] && s.x[f]);
            }
        }
    }
}

TEST(Instances, Deterministic) {
    InstanceSpec spec{30, 0.2, 0.3, 99};
    Instance a = generate_instance(spec);
    Instance b = generate_instance(spec);
    EXPECT_EQ(a.graph, b.graph);
    EXPECT_EQ(a.frames, b.frames);
    spec.seed = 100;
    EXPECT_FALSE(generate_instance(spec).graph == a.graph);
}

TEST(Instances, ConnectivityAtScaledDensity) {
    // Just above ln(n)/n a G(n, p) graph is connected with probability close to
    // exp(-n (1 - p)^(n - 1)), the chance of having no isolated vertex.
    const std::size_t n = 100;
    const int trials = 200;
    double p = density_for_size(n);
    EXPECT_GT(p, std::log(100.0) / 100.0);
    double expected = std::exp(-static_cast<double>(n) * std::pow(1.0 - p, n - 1.0));
    int connected_count = 0;
    for (std::uint64_t seed = 0; seed < trials; ++seed) {
        connected_count += connected(random_graph({n, p, 0.0, seed})) ? 1 : 0;
    }
    double sigma = std::sqrt(trials * expected * (1.0 - expected));
    EXPECT_NEAR(connected_count, trials * expected, 5.0 * sigma);

    // Twice the threshold leaves almost no room for an isolated vertex.
    double dense = 2.0 * std::log(100.0) / 100.0;
    int dense_connected = 0;
    for (std::uint64_t seed = 0; seed < trials; ++seed) {
        dense_connected += connected(random_graph({n, dense, 0.0, seed})) ? 1 : 0;
    }
    EXPECT_GE(dense_connected, 195);
}

TEST(DensityForSize, Examples) {
    EXPECT_DOUBLE_EQ(density_for_size(2), 0.5);
    EXPECT_DOUBLE_EQ(density_for_size(17), 0.125);
    EXPECT_THROW(density_for_size(1), std::invalid_argument);
}
