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
#include <utility>
#include <vector>

#include "cutrank/bit_matrix.h"

namespace cutrank {

using Vertex = std::size_t;
inline constexpr Vertex kNoVertex = kNoBit;

/// Simple undirected graph on vertices 0..n-1, stored as a symmetric
/// adjacency BitMatrix with zero diagonal.
class Graph {
   public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n, n) {}

    std::size_t num_vertices() const { return adj_.rows(); }
    std::size_t num_edges() const { return adj_.count_ones() / 2; }

    bool has_edge(Vertex u, Vertex v) const { return adj_.get(u, v); }
    /// Throws std::invalid_argument on self-loops or out-of-range vertices.
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    void toggle_edge(Vertex u, Vertex v);

    std::vector<Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const;
    /// Edges (u, v) with u < v in ascending lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    const BitMatrix& adjacency() const { return adj_; }

    /// In-place local complementation at v.
    void complement_neighborhood(Vertex v);

    bool operator==(const Graph& other) const = default;

   private:
    void check_pair(Vertex u, Vertex v) const;

    BitMatrix adj_;
};

/// G*v: toggles every edge between two neighbors of v.
Graph local_complement(const Graph& g, Vertex v);

struct InducedSubgraph {
    Graph graph;
    /// old id -> new id, kNoVertex for deleted vertices.
    std::vector<Vertex> id_map;
};

InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> vs);

/// A[x, y] in the given orders. x and y must be disjoint.
BitMatrix cut_matrix(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y);

/// V \ x in ascending order.
std::vector<Vertex> complement_of(std::size_t n, std::span<const Vertex> x);

}  // namespace cutrank
