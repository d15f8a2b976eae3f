// Copyright 2026 The cutrank Authors
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

#include "cutrank/distribute.h"

#include <gtest/gtest.h>

#include "json.hpp"
#include <random>

#include "cutrank/generators.h"
#include "oracles.h"

using namespace cutrank;
using cutrank::testing::oracle_cut_rank;
using cutrank::testing::random_graph;
using cutrank::testing::random_subset;

namespace {

// Recovery done by hand: toggle edges among neighbours, then drop ancillas.
Graph replay_recovery(Graph g, const std::vector<Vertex>& sequence, std::size_t n) {
    for (Vertex v : sequence) {
        auto nb = g.neighbors(v);
        for (std::size_t a = 0; a < nb.size(); a++) {
            for (std::size_t b = a + 1; b < nb.size(); b++) {
                g.toggle_edge(nb[a], nb[b]);
            }
        }
    }
    Graph out(n);
    for (auto [u, v] : g.edges()) {
        if (u < n && v < n) {
            out.add_edge(u, v);
        }
    }
    return out;
}

}  // namespace

TEST(distribute, six_vertex_example) {
    Graph g = cutrank::testing::example_graph();
    std::vector<Vertex> x{0, 1, 2};
    auto plan = plan_distribution(g, x);
    EXPECT_EQ(plan.rank, 2u);
    EXPECT_EQ(plan.embedded, cutrank::testing::example_embedded_graph());
    EXPECT_EQ(plan.ancilla_pairs, (std::vector<std::pair<Vertex, Vertex>>{{6, 7}, {8, 9}}));
    EXPECT_EQ(plan.recovery_sequence, (std::vector<Vertex>{6, 7, 6, 8, 9, 8}));
    EXPECT_EQ(plan.qpu_a, (std::vector<Vertex>{0, 1, 2, 6, 8}));
    EXPECT_EQ(plan.qpu_b, (std::vector<Vertex>{3, 4, 5, 7, 9}));
    EXPECT_EQ(count_cross_edges(plan.embedded, plan.qpu_a), 2u);
    EXPECT_EQ(count_cross_edges(g, x), 6u);
    EXPECT_EQ(recover_original(plan), g);
    EXPECT_TRUE(verify_recovery(plan));
}

TEST(distribute, example_from_any_partition_order) {
    Graph g = cutrank::testing::example_graph();
    std::vector<Vertex> x{2, 0, 1};
    EXPECT_EQ(plan_distribution(g, x).embedded, cutrank::testing::example_embedded_graph());
}

TEST(distribute, rank_zero) {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    std::vector<Vertex> x{0, 1};
    auto plan = plan_distribution(g, x);
    EXPECT_EQ(plan.rank, 0u);
    EXPECT_TRUE(plan.ancilla_pairs.empty());
    EXPECT_TRUE(plan.recovery_sequence.empty());
    EXPECT_EQ(plan.embedded, g);
    EXPECT_TRUE(verify_recovery(plan));
}

TEST(distribute, rejects_bad_partitions) {
    Graph g = grid_graph(2, 2);
    std::vector<Vertex> all{0, 1, 2, 3};
    std::vector<Vertex> bad{0, 9};
    std::vector<Vertex> dup{0, 0};
    EXPECT_THROW(plan_distribution(g, all), std::invalid_argument);
    EXPECT_THROW(plan_distribution(g, bad), std::invalid_argument);
    EXPECT_THROW(plan_distribution(g, dup), std::invalid_argument);
}

TEST(distribute, random_instances_recover) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 500; t++) {
        std::size_t n = rng() % 20 + 2;
        Graph g = random_graph(rng, n, (rng() % 9 + 1) / 10.0);
        auto x = random_subset(rng, n, rng() % (n - 1) + 1);
        auto plan = plan_distribution(g, x);
        std::size_t r = oracle_cut_rank(g, x);
        ASSERT_EQ(plan.rank, r);
        ASSERT_EQ(plan.ancilla_pairs.size(), r);
        ASSERT_EQ(plan.embedded.num_vertices(), n + 2 * r);
        ASSERT_EQ(count_cross_edges(plan.embedded, plan.qpu_a), r);
        ASSERT_EQ(plan.qpu_a.size() + plan.qpu_b.size(), n + 2 * r);
        ASSERT_EQ(replay_recovery(plan.embedded, plan.recovery_sequence, n), g);
        ASSERT_TRUE(verify_recovery(plan));
    }
}

TEST(distribute, qaoa_partition_has_three_pairs) {
    QaoaGraph q = qaoa_graph(example_qaoa_hamiltonian());
    std::vector<Vertex> x{0, 1, 6, 7, 8, 11};
    auto plan = plan_distribution(q.graph, x);
    EXPECT_EQ(plan.rank, 3u);
    EXPECT_EQ(plan.embedded.num_vertices(), 18u);
    EXPECT_TRUE(verify_recovery(plan));
}

TEST(distribute, json) {
    auto plan = plan_distribution(cutrank::testing::example_graph(), std::vector<Vertex>{0, 1, 2});
    auto j = nlohmann::json::parse(plan_to_json(plan));
    EXPECT_EQ(j["rank"], 2);
    EXPECT_EQ(j["pairs"], nlohmann::json::parse("[[6,7],[8,9]]"));
    EXPECT_EQ(j["qpu_assignment"]["A"], nlohmann::json::parse("[0,1,2,6,8]"));
    EXPECT_EQ(j["qpu_assignment"]["B"], nlohmann::json::parse("[3,4,5,7,9]"));
    EXPECT_EQ(j["recovery_sequence"], nlohmann::json::parse("[6,7,6,8,9,8]"));
}
