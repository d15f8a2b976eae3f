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

#include "cutrank/generators.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cutrank/rng.h"

namespace cutrank {

void Hamiltonian::validate() const {
    for (const auto& t : terms) {
        if (t.empty()) {
            throw std::invalid_argument("Hamiltonian: empty term");
        }
        std::vector<bool> seen(num_qubits, false);
        for (std::size_t q : t) {
            if (q >= num_qubits) {
                throw std::invalid_argument("Hamiltonian: qubit index out of range");
            }
            if (seen[q]) {
                throw std::invalid_argument("Hamiltonian: repeated qubit in a term");
            }
            seen[q] = true;
        }
    }
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
    Graph g(rows * cols);
    for (std::size_t r = 0; r < rows; r++) {
        for (std::size_t c = 0; c < cols; c++) {
            Vertex v = r * cols + c;
            if (c + 1 < cols) {
                g.add_edge(v, v + 1);
            }
            if (r + 1 < rows) {
                g.add_edge(v, v + cols);
            }
        }
    }
    return g;
}

Graph erdos_renyi_graph(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("erdos_renyi_graph: p must lie in [0, 1]");
    }
    Rng rng(seed);
    Graph g(n);
    for (Vertex u = 0; u < n; u++) {
        for (Vertex v = u + 1; v < n; v++) {
            if (rng.uniform01() < p) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

QaoaGraph qaoa_graph(const Hamiltonian& h) {
    h.validate();
    QaoaGraph out;
    out.graph = Graph(h.num_qubits + h.terms.size());
    for (std::size_t q = 0; q < h.num_qubits; q++) {
        out.circuit_qubits.push_back(q);
    }
    for (std::size_t t = 0; t < h.terms.size(); t++) {
        Vertex a = h.num_qubits + t;
        out.ancillas.push_back(a);
        for (std::size_t q : h.terms[t]) {
            out.graph.add_edge(a, q);
        }
    }
    return out;
}

Hamiltonian random_hamiltonian(std::size_t num_qubits, std::size_t num_terms, std::size_t locality,
                               std::uint64_t seed) {
    if (locality == 0 || locality > num_qubits) {
        throw std::invalid_argument("random_hamiltonian: locality must be in [1, num_qubits]");
    }
    // C(num_qubits, locality), saturating once it exceeds num_terms.
    double available = 1.0;
    for (std::size_t k = 0; k < locality; k++) {
        available = available * static_cast<double>(num_qubits - k) / static_cast<double>(k + 1);
    }
    if (available + 0.5 < static_cast<double>(num_terms)) {
        throw std::invalid_argument("random_hamiltonian: not enough distinct supports");
    }
    Rng rng(seed);
    Hamiltonian h;
    h.num_qubits = num_qubits;
    std::set<std::vector<std::size_t>> used;
    std::vector<std::size_t> pool(num_qubits);
    while (h.terms.size() < num_terms) {
        for (std::size_t q = 0; q < num_qubits; q++) {
            pool[q] = q;
        }
        for (std::size_t k = 0; k < locality; k++) {
            std::swap(pool[k], pool[k + rng.below(num_qubits - k)]);
        }
        std::vector<std::size_t> support(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(locality));
        std::sort(support.begin(), support.end());
        if (used.insert(support).second) {
            h.terms.push_back(std::move(support));
        }
    }
    return h;
}

Hamiltonian example_qaoa_hamiltonian() {
    Hamiltonian h;
    h.num_qubits = 6;
    h.terms = {{0, 1, 2}, {0, 3, 5}, {1, 2, 4}, {3, 4, 5}, {2, 3, 4}, {2, 3, 5}};
    return h;
}

}  // namespace cutrank
