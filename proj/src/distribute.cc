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

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace cutrank {

DistributionPlan plan_distribution(const Graph& g, std::span<const Vertex> x) {
    const std::size_t n = g.num_vertices();
    DistributionPlan plan;
    plan.original = g;
    plan.x.assign(x.begin(), x.end());
    std::sort(plan.x.begin(), plan.x.end());
    plan.y = complement_of(n, plan.x);
    if (plan.y.empty() || std::adjacent_find(plan.x.begin(), plan.x.end()) != plan.x.end()) {
        throw std::invalid_argument("plan_distribution: need a proper subset without duplicates");
    }

    auto terms = rank_one_decompose(cut_matrix(g, plan.x, plan.y));
    plan.rank = terms.size();
    plan.embedded = Graph(n + 2 * plan.rank);

    std::vector<bool> in_x(n, false);
    for (Vertex v : plan.x) {
        in_x[v] = true;
    }
    for (auto [u, v] : g.edges()) {
        if (in_x[u] == in_x[v]) {
            plan.embedded.add_edge(u, v);
        }
    }

    plan.qpu_a = plan.x;
    plan.qpu_b = plan.y;
    for (std::size_t t = 0; t < terms.size(); t++) {
        Vertex a = n + 2 * t;
        Vertex b = a + 1;
        for (std::size_t r : terms[t].rows) {
            plan.embedded.add_edge(a, plan.x[r]);
        }
        for (std::size_t c : terms[t].cols) {
            plan.embedded.add_edge(b, plan.y[c]);
        }
        plan.embedded.add_edge(a, b);
        plan.ancilla_pairs.emplace_back(a, b);
        plan.recovery_sequence.insert(plan.recovery_sequence.end(), {a, b, a});
        plan.qpu_a.push_back(a);
        plan.qpu_b.push_back(b);
    }
    return plan;
}

Graph recover_original(const DistributionPlan& plan) {
    Graph g = plan.embedded;
    for (Vertex v : plan.recovery_sequence) {
        g.complement_neighborhood(v);
    }
    std::vector<Vertex> ancillas;
    for (auto [a, b] : plan.ancilla_pairs) {
        ancillas.push_back(a);
        ancillas.push_back(b);
    }
    return delete_vertices(g, ancillas).graph;
}

bool verify_recovery(const DistributionPlan& plan) { return recover_original(plan) == plan.original; }

std::size_t count_cross_edges(const Graph& g, std::span<const Vertex> side) {
    std::vector<bool> in_side(g.num_vertices(), false);
    for (Vertex v : side) {
        in_side.at(v) = true;
    }
    std::size_t count = 0;
    for (auto [u, v] : g.edges()) {
        count += in_side[u] != in_side[v] ? 1 : 0;
    }
    return count;
}

std::string plan_to_json(const DistributionPlan& plan) {
    nlohmann::ordered_json j;
    j["rank"] = plan.rank;
    j["pairs"] = nlohmann::ordered_json::array();
    for (auto [a, b] : plan.ancilla_pairs) {
        j["pairs"].push_back({a, b});
    }
    j["qpu_assignment"] = {{"A", plan.qpu_a}, {"B", plan.qpu_b}};
    j["recovery_sequence"] = plan.recovery_sequence;
    return j.dump(2) + "\n";
}

}  // namespace cutrank
