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

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cutrank/generators.h"
#include "cutrank/graph.h"

namespace cutrank {

/// Malformed input file or stream.
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Edge-list text format:
//   n m
//   u v        (m lines, u < v, ascending lexicographic order)
// Blank lines and '#' comments are skipped when reading and never written.
// The reader accepts edges in any order and orientation but rejects
// duplicates, self-loops and out-of-range ids.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::filesystem::path& path, const Graph& g);
std::string to_edge_list(const Graph& g);

// Hamiltonian JSON: {"num_qubits": int, "terms": [{"qubits": [int, ...], "coeff": float}]}.
// "coeff" is optional and ignored.
Hamiltonian parse_hamiltonian_json(const std::string& text);
Hamiltonian read_hamiltonian_file(const std::filesystem::path& path);
std::string to_hamiltonian_json(const Hamiltonian& h);

}  // namespace cutrank
