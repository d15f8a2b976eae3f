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

#include "cutrank/graph_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cutrank {

namespace {

// Next non-blank, non-comment line with the comment stripped.
bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        lineno++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            return true;
        }
    }
    return false;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& what) {
    throw ParseError("edge list line " + std::to_string(lineno) + ": " + what);
}

// Parses exactly two non-negative integers from a line.
std::pair<long long, long long> two_ints(const std::string& line, std::size_t lineno) {
    std::istringstream ss(line);
    long long a = -1;
    long long b = -1;
    std::string extra;
    if (!(ss >> a >> b) || (ss >> extra) || a < 0 || b < 0) {
        fail(lineno, "expected two non-negative integers");
    }
    return {a, b};
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!next_content_line(in, line, lineno)) {
        throw ParseError("edge list: missing header line 'n m'");
    }
    auto [n, m] = two_ints(line, lineno);
    Graph g(static_cast<std::size_t>(n));
    for (long long e = 0; e < m; e++) {
        if (!next_content_line(in, line, lineno)) {
            throw ParseError("edge list: expected " + std::to_string(m) + " edges, found " + std::to_string(e));
        }
        auto [u, v] = two_ints(line, lineno);
        if (u >= n || v >= n) {
            fail(lineno, "vertex id out of range");
        }
        if (u == v) {
            fail(lineno, "self-loop");
        }
        auto uu = static_cast<Vertex>(u);
        auto vv = static_cast<Vertex>(v);
        if (g.has_edge(uu, vv)) {
            fail(lineno, "duplicate edge");
        }
        g.add_edge(uu, vv);
    }
    if (next_content_line(in, line, lineno)) {
        fail(lineno, "more edges than announced in the header");
    }
    return g;
}

Graph read_edge_list_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    auto edges = g.edges();
    out << g.num_vertices() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) {
        out << u << ' ' << v << '\n';
    }
}

void write_edge_list_file(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot write " + path.string());
    }
    write_edge_list(out, g);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream ss;
    write_edge_list(ss, g);
    return ss.str();
}

Hamiltonian parse_hamiltonian_json(const std::string& text) {
    Hamiltonian h;
    try {
        auto j = nlohmann::json::parse(text);
        h.num_qubits = j.at("num_qubits").get<std::size_t>();
        for (const auto& term : j.at("terms")) {
            h.terms.push_back(term.at("qubits").get<std::vector<std::size_t>>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("hamiltonian json: ") + e.what());
    }
    try {
        h.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return h;
}

Hamiltonian read_hamiltonian_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_hamiltonian_json(ss.str());
}

std::string to_hamiltonian_json(const Hamiltonian& h) {
    nlohmann::json j;
    j["num_qubits"] = h.num_qubits;
    j["terms"] = nlohmann::json::array();
    for (const auto& t : h.terms) {
        j["terms"].push_back({{"qubits", t}});
    }
    return j.dump(2) + "\n";
}

}  // namespace cutrank
