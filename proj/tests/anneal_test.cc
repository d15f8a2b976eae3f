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

#include "cutrank/anneal.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cutrank/cut_rank_state.h"
#include "cutrank/generators.h"
#include "cutrank/rng.h"
#include "oracles.h"

using namespace cutrank;
using cutrank::testing::oracle_cut_rank;
using cutrank::testing::random_graph;

namespace {

struct ReferenceRun {
    std::vector<Vertex> initial;
    std::vector<Vertex> final_x;
    std::size_t best = 0;
    std::vector<std::pair<Vertex, Vertex>> path;
    std::size_t evaluated = 0;
    // Per-delta counts of evaluated and accepted swaps, indexed by delta + 2.
    std::array<std::size_t, 5> seen{};
    std::array<std::size_t, 5> taken{};
};

std::vector<Vertex> members(const std::vector<bool>& in_x, bool want) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < in_x.size(); v++) {
        if (in_x[v] == want) {
            out.push_back(v);
        }
    }
    return out;
}

// Straight transcription of the documented walk on top of the dense oracle.
ReferenceRun reference_anneal(const Graph& g, std::size_t k, const Schedule& schedule, std::uint64_t seed) {
    std::size_t n = g.num_vertices();
    Rng rng(seed);
    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; v++) {
        perm[v] = v;
    }
    for (std::size_t t = 0; t < k; t++) {
        std::swap(perm[t], perm[t + rng.below(n - t)]);
    }
    std::vector<bool> in_x(n, false);
    for (std::size_t t = 0; t < k; t++) {
        in_x[perm[t]] = true;
    }
    ReferenceRun run;
    run.initial = members(in_x, true);
    std::size_t cur = oracle_cut_rank(g, run.initial);
    run.best = cur;
    for (double temp : schedule.temperatures) {
        for (Vertex i : members(in_x, true)) {
            if (!in_x[i]) {
                continue;
            }
            for (Vertex j : members(in_x, false)) {
                in_x[i] = false;
                in_x[j] = true;
                std::size_t cand = oracle_cut_rank(g, members(in_x, true));
                int dc = static_cast<int>(cand) - static_cast<int>(cur);
                double u = rng.uniform01();
                run.evaluated++;
                run.seen[dc + 2]++;
                if (std::exp(-dc / temp) > u) {
                    run.taken[dc + 2]++;
                    run.path.emplace_back(i, j);
                    cur = cand;
                    run.best = std::min(run.best, cur);
                    break;
                }
                in_x[i] = true;
                in_x[j] = false;
            }
        }
    }
    run.final_x = members(in_x, true);
    return run;
}

AnnealOptions options_with(std::uint64_t seed, Backend backend) {
    AnnealOptions opt;
    opt.seed = seed;
    opt.backend = backend;
    opt.record_path = true;
    opt.record_trace = true;
    return opt;
}

}  // namespace

TEST(schedule, presets) {
    auto s = Schedule::standard();
    ASSERT_EQ(s.temperatures.size(), 10u);
    EXPECT_DOUBLE_EQ(s.temperatures.front(), 1.0);
    EXPECT_DOUBLE_EQ(s.temperatures.back(), 0.1);
    auto f = Schedule::fine();
    ASSERT_EQ(f.temperatures.size(), 100u);
    EXPECT_DOUBLE_EQ(f.temperatures.front(), 1.0);
    EXPECT_DOUBLE_EQ(f.temperatures.back(), 0.1);
    EXPECT_TRUE(std::is_sorted(f.temperatures.rbegin(), f.temperatures.rend()));
}

TEST(schedule, parse) {
    EXPECT_EQ(parse_schedule("default").temperatures, Schedule::standard().temperatures);
    EXPECT_EQ(parse_schedule("fine").temperatures, Schedule::fine().temperatures);
    EXPECT_EQ(parse_schedule("2:1:3").temperatures, (std::vector<double>{2.0, 1.5, 1.0}));
    EXPECT_EQ(parse_schedule("0.5,0.25").temperatures, (std::vector<double>{0.5, 0.25}));
    EXPECT_THROW(parse_schedule("1,0"), std::invalid_argument);
    EXPECT_THROW(parse_schedule("abc"), std::invalid_argument);
    EXPECT_THROW(parse_schedule("1:0.5:x"), std::invalid_argument);
    EXPECT_THROW(parse_schedule(""), std::invalid_argument);
}

TEST(backend, names) {
    EXPECT_EQ(parse_backend("naive"), Backend::kNaive);
    EXPECT_EQ(parse_backend(backend_name(Backend::kIncremental)), Backend::kIncremental);
    EXPECT_EQ(parse_backend("fast"), std::nullopt);
}

TEST(anneal, rejects_bad_partition_size) {
    Graph g = grid_graph(2, 2);
    EXPECT_THROW(anneal(g, 0, {}), std::invalid_argument);
    EXPECT_THROW(anneal(g, 4, {}), std::invalid_argument);
    AnnealOptions opt;
    opt.schedule.temperatures = {};
    EXPECT_THROW(anneal(g, 2, opt), std::invalid_argument);
}

TEST(anneal, matches_reference_walk) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 25; t++) {
        std::size_t n = rng() % 14 + 4;
        Graph g = random_graph(rng, n, 0.3);
        std::size_t k = rng() % (n - 1) + 1;
        std::uint64_t seed = rng();
        Schedule sched = Schedule::linear(1.0, 0.1, 4);
        auto ref = reference_anneal(g, k, sched, seed);
        for (Backend b : {Backend::kIncremental, Backend::kNaive}) {
            AnnealOptions opt = options_with(seed, b);
            opt.schedule = sched;
            auto res = anneal(g, k, opt);
            ASSERT_EQ(res.initial_partition, ref.initial);
            ASSERT_EQ(res.path, ref.path) << backend_name(b);
            ASSERT_EQ(res.final_partition, ref.final_x);
            ASSERT_EQ(res.best_rank, ref.best);
            ASSERT_EQ(res.evaluated_swaps, ref.evaluated);
        }
    }
}

TEST(anneal, deterministic_for_a_seed) {
    Graph g = grid_graph(5, 5);
    auto a = anneal(g, 12, options_with(42, Backend::kIncremental));
    auto b = anneal(g, 12, options_with(42, Backend::kIncremental));
    EXPECT_EQ(a.path, b.path);
    EXPECT_EQ(a.best_partition, b.best_partition);
    EXPECT_EQ(a.final_rank, b.final_rank);
    EXPECT_EQ(a.case_histogram, b.case_histogram);
    auto c = anneal(g, 12, options_with(43, Backend::kIncremental));
    EXPECT_NE(a.initial_partition, c.initial_partition);
}

TEST(anneal, backends_agree_on_grid) {
    Graph g = grid_graph(5, 5);
    for (std::uint64_t seed = 0; seed < 3; seed++) {
        auto inc = anneal(g, 12, options_with(seed, Backend::kIncremental));
        auto nav = anneal(g, 12, options_with(seed, Backend::kNaive));
        EXPECT_EQ(inc.path, nav.path);
        EXPECT_EQ(inc.best_rank, nav.best_rank);
        EXPECT_EQ(inc.final_rank, nav.final_rank);
        EXPECT_EQ(inc.best_partition, nav.best_partition);
        EXPECT_TRUE(nav.case_histogram.empty());
    }
}

TEST(anneal, reported_ranks_are_true_cut_ranks) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; t++) {
        std::size_t n = rng() % 30 + 4;
        Graph g = random_graph(rng, n, 0.2);
        std::size_t k = n / 2;
        auto opt = options_with(rng(), Backend::kIncremental);
        opt.self_check = true;
        auto res = anneal(g, k, opt);
        ASSERT_EQ(res.initial_partition.size(), k);
        ASSERT_EQ(res.best_partition.size(), k);
        ASSERT_EQ(res.final_partition.size(), k);
        ASSERT_EQ(res.initial_rank, oracle_cut_rank(g, res.initial_partition));
        ASSERT_EQ(res.best_rank, oracle_cut_rank(g, res.best_partition));
        ASSERT_EQ(res.final_rank, oracle_cut_rank(g, res.final_partition));
        ASSERT_LE(res.best_rank, res.initial_rank);
        ASSERT_LE(res.best_rank, res.final_rank);
        ASSERT_EQ(res.trace.size(), opt.schedule.temperatures.size());
        std::size_t acc = 0;
        std::size_t ev = 0;
        for (const auto& s : res.trace) {
            acc += s.accepted;
            ev += s.evaluated;
        }
        ASSERT_EQ(acc, res.accepted_swaps);
        ASSERT_EQ(ev, res.evaluated_swaps);
        ASSERT_EQ(res.path.size(), res.accepted_swaps);
        ASSERT_EQ(res.trace.back().rank, res.final_rank);
        std::size_t hist = 0;
        for (auto h : res.case_histogram) {
            hist += h;
        }
        ASSERT_EQ(hist, res.evaluated_swaps);
    }
}

TEST(anneal, path_replays_to_final_partition) {
    Graph g = grid_graph(4, 4);
    auto res = anneal(g, 8, options_with(3, Backend::kIncremental));
    std::vector<bool> in_x(16, false);
    for (Vertex v : res.initial_partition) {
        in_x[v] = true;
    }
    for (auto [i, j] : res.path) {
        ASSERT_TRUE(in_x[i]);
        ASSERT_FALSE(in_x[j]);
        in_x[i] = false;
        in_x[j] = true;
    }
    EXPECT_EQ(members(in_x, true), res.final_partition);
}

TEST(anneal, zero_delta_swaps_always_accepted) {
    // No edges: every swap has delta 0, so every evaluation is accepted and
    // each i leaves X on its first candidate.
    Graph g(10);
    auto opt = options_with(5, Backend::kIncremental);
    opt.schedule = Schedule::linear(0.01, 0.001, 5);
    auto res = anneal(g, 4, opt);
    EXPECT_EQ(res.accepted_swaps, res.evaluated_swaps);
    EXPECT_EQ(res.evaluated_swaps, 4u * 5u);
}

TEST(anneal, low_temperature_never_goes_uphill) {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 10; t++) {
        Graph g = random_graph(rng, 20, 0.25);
        auto opt = options_with(rng(), Backend::kIncremental);
        opt.schedule = Schedule::linear(0.01, 0.01, 5);
        auto res = anneal(g, 10, opt);
        std::vector<Vertex> x = res.initial_partition;
        std::size_t cur = oracle_cut_rank(g, x);
        for (auto [i, j] : res.path) {
            x = cutrank::testing::swapped(x, i, j);
            std::size_t next = oracle_cut_rank(g, x);
            ASSERT_LE(next, cur);
            cur = next;
        }
        EXPECT_EQ(cur, res.final_rank);
    }
}

TEST(anneal, uphill_acceptance_rate) {
    // At T = 1 a +1 swap is taken with probability exp(-1); +2 with exp(-2).
    std::array<std::size_t, 5> seen{};
    std::array<std::size_t, 5> taken{};
    std::mt19937_64 rng(7);
    Schedule sched = Schedule::linear(1.0, 1.0, 3);
    for (int t = 0; t < 150; t++) {
        Graph g = random_graph(rng, 14, 0.3);
        auto ref = reference_anneal(g, 7, sched, rng());
        for (int d = 0; d < 5; d++) {
            seen[d] += ref.seen[d];
            taken[d] += ref.taken[d];
        }
    }
    ASSERT_GT(seen[3], 500u);
    double rate = static_cast<double>(taken[3]) / seen[3];
    double sigma = std::sqrt(std::exp(-1.0) * (1 - std::exp(-1.0)) / seen[3]);
    EXPECT_NEAR(rate, std::exp(-1.0), 5 * sigma);
    EXPECT_EQ(taken[0] + taken[1] + taken[2], seen[0] + seen[1] + seen[2]);
}

TEST(anneal, live_iteration_keeps_invariants) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 10; t++) {
        Graph g = random_graph(rng, 24, 0.2);
        std::uint64_t seed = rng();
        auto inc = options_with(seed, Backend::kIncremental);
        inc.live_iteration = true;
        auto nav = inc;
        nav.backend = Backend::kNaive;
        auto a = anneal(g, 12, inc);
        auto b = anneal(g, 12, nav);
        ASSERT_EQ(a.path, b.path);
        ASSERT_EQ(a.final_rank, oracle_cut_rank(g, a.final_partition));
        ASSERT_EQ(a.best_rank, oracle_cut_rank(g, a.best_partition));
    }
}

TEST(anneal_restarts, summary_is_consistent) {
    Graph g = grid_graph(5, 5);
    AnnealOptions opt;
    opt.seed = 100;
    auto one = anneal_restarts(g, 12, opt, 6, 1);
    auto many = anneal_restarts(g, 12, opt, 6, 3);
    ASSERT_EQ(one.runs.size(), 6u);
    std::size_t lo = one.runs[0].best_rank;
    double mean_best = 0;
    for (std::size_t k = 0; k < 6; k++) {
        EXPECT_EQ(one.runs[k].seed, 100 + k);
        EXPECT_EQ(one.runs[k].path, many.runs[k].path);
        lo = std::min(lo, one.runs[k].best_rank);
        mean_best += one.runs[k].best_rank / 6.0;
    }
    EXPECT_EQ(one.best.best_rank, lo);
    EXPECT_EQ(many.best.seed, one.best.seed);
    for (const auto& r : one.runs) {
        if (r.best_rank == lo) {
            EXPECT_EQ(one.best.seed, r.seed);
            break;
        }
    }
    EXPECT_NEAR(one.mean_best_rank, mean_best, 1e-9);
    EXPECT_LE(one.min_final_rank, one.max_final_rank);
    EXPECT_THROW(anneal_restarts(g, 12, opt, 0), std::invalid_argument);
}
