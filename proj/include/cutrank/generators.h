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
#include <cstdint>
#include <vector>

#include "cutrank/graph.h"

namespace cutrank {

/// Supports of the Pauli-Z product terms of a diagonal Hamiltonian. Term
/// coefficients do not influence the resource graph and are not kept.
struct Hamiltonian {
    std::size_t num_qubits = 0;
    std::vector<std::vector<std::size_t>> terms;

    /// Throws std::invalid_argument if a term is empty, repeats a qubit, or
    /// indexes past num_qubits.
    void validate() const;
};

/// rows x cols 4-neighbor grid; vertex id = r * cols + c.
Graph grid_graph(std::size_t rows, std::size_t cols);

/// G(n, p): each pair u < v, in lexicographic order, is kept iff a fresh
/// uniform draw is below p.
Graph erdos_renyi_graph(std::size_t n, double p, std::uint64_t seed);

struct QaoaGraph {
    Graph graph;
    std::vector<Vertex> circuit_qubits;
    std::vector<Vertex> ancillas;
};

/// Circuit qubits keep ids 0..num_qubits-1; term t gets ancilla num_qubits + t
/// joined to every qubit in its support.
QaoaGraph qaoa_graph(const Hamiltonian& h);

/// num_terms distinct supports, each a uniformly random `locality`-subset of
/// the qubits. Throws std::invalid_argument if not enough distinct subsets exist.
Hamiltonian random_hamiltonian(std::size_t num_qubits, std::size_t num_terms, std::size_t locality, std::uint64_t seed);

/// The 3-local six-qubit example Hamiltonian used throughout the tests:
/// Z0Z1Z2 + Z0Z3Z5 + Z1Z2Z4 + Z3Z4Z5 + Z2Z3Z4 + Z2Z3Z5.
Hamiltonian example_qaoa_hamiltonian();

}  // namespace cutrank
