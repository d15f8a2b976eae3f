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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cutrank/graph.h"

namespace cutrank {

/// An ancilla embedding of a bipartitioned graph in which the only edges
/// between the two QPUs are one edge per ancilla pair.
///
/// For each rank-one term u_t v_t^T of A[X, Y], ancilla a_t = n + 2t joins the
/// support of u_t (in X) and b_t = n + 2t + 1 joins the support of v_t (in Y),
/// and a_t - b_t is an edge. The original X-Y edges are dropped; edges inside X
/// and inside Y are kept. Local complementation at a_t, b_t, a_t followed by
/// deleting all ancillas recovers the original graph.
struct DistributionPlan {
    Graph original;
    std::vector<Vertex> x;  // ascending
    std::vector<Vertex> y;  // ascending
    std::size_t rank = 0;
    Graph embedded;
    std::vector<std::pair<Vertex, Vertex>> ancilla_pairs;
    std::vector<Vertex> recovery_sequence;
    std::vector<Vertex> qpu_a;  // X plus every a_t
    std::vector<Vertex> qpu_b;  // Y plus every b_t
};

/// Throws std::invalid_argument if x leaves V \ x empty or has bad ids.
DistributionPlan plan_distribution(const Graph& g, std::span<const Vertex> x);

/// Applies the recovery sequence to the embedded graph and deletes the ancillas.
Graph recover_original(const DistributionPlan& plan);

bool verify_recovery(const DistributionPlan& plan);

/// Number of edges with exactly one endpoint in `side`.
std::size_t count_cross_edges(const Graph& g, std::span<const Vertex> side);

/// {"rank": r, "pairs": [[a, b], ...], "qpu_assignment": {"A": [...], "B": [...]},
///  "recovery_sequence": [...]}
std::string plan_to_json(const DistributionPlan& plan);

}  // namespace cutrank
