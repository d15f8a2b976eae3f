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

#include "cutrank/graph.h"

#include <stdexcept>
#include <string>

namespace cutrank {

void Graph::check_pair(Vertex u, Vertex v) const {
    if (u >= num_vertices() || v >= num_vertices()) {
        throw std::invalid_argument("Graph: vertex out of range");
    }
    if (u == v) {
        throw std::invalid_argument("Graph: self-loops are not allowed");
    }
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    adj_.set(u, v, true);
    adj_.set(v, u, true);
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    adj_.set(u, v, false);
    adj_.set(v, u, false);
}

void Graph::toggle_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    adj_.flip(u, v);
    adj_.flip(v, u);
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex u = 0; u < num_vertices(); u++) {
        if (adj_.get(v, u)) {
            out.push_back(u);
        }
    }
    return out;
}

std::size_t Graph::degree(Vertex v) const {
    std::size_t d = 0;
    for (Word w : adj_.row(v)) {
        d += static_cast<std::size_t>(std::popcount(w));
    }
    return d;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < num_vertices(); u++) {
        for (Vertex v = u + 1; v < num_vertices(); v++) {
            if (adj_.get(u, v)) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

void Graph::complement_neighborhood(Vertex v) {
    if (v >= num_vertices()) {
        throw std::invalid_argument("local_complement: vertex out of range");
    }
    std::vector<Word> nbhd(adj_.row(v).begin(), adj_.row(v).end());
    for (std::size_t w = 0; w < nbhd.size(); w++) {
        Word bits = nbhd[w];
        while (bits) {
            Vertex u = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
            bits &= bits - 1;
            // Toggling row u by N(v) also flips (u, u) on, since u is in N(v).
            adj_.xor_row(u, nbhd);
            adj_.set(u, u, false);
        }
    }
}

Graph local_complement(const Graph& g, Vertex v) {
    Graph out = g;
    out.complement_neighborhood(v);
    return out;
}

InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> vs) {
    std::vector<bool> gone(g.num_vertices(), false);
    for (Vertex v : vs) {
        if (v >= g.num_vertices()) {
            throw std::invalid_argument("delete_vertices: vertex out of range");
        }
        gone[v] = true;
    }
    InducedSubgraph out;
    out.id_map.assign(g.num_vertices(), kNoVertex);
    std::vector<std::size_t> kept;
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        if (!gone[v]) {
            out.id_map[v] = kept.size();
            kept.push_back(v);
        }
    }
    out.graph = Graph(kept.size());
    for (auto [u, v] : g.edges()) {
        if (!gone[u] && !gone[v]) {
            out.graph.add_edge(out.id_map[u], out.id_map[v]);
        }
    }
    return out;
}

BitMatrix cut_matrix(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y) {
    std::vector<bool> in_x(g.num_vertices(), false);
    for (Vertex v : x) {
        if (v < g.num_vertices()) {
            in_x[v] = true;
        }
    }
    for (Vertex v : y) {
        if (v < g.num_vertices() && in_x[v]) {
            throw std::invalid_argument("cut_matrix: row and column sets overlap");
        }
    }
    return submatrix(g.adjacency(), x, y);
}

std::vector<Vertex> complement_of(std::size_t n, std::span<const Vertex> x) {
    std::vector<bool> in_x(n, false);
    for (Vertex v : x) {
        if (v >= n) {
            throw std::invalid_argument("complement_of: vertex out of range");
        }
        in_x[v] = true;
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; v++) {
        if (!in_x[v]) {
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace cutrank
