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

#include "cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "cutrank/graph_io.h"
#include "json.hpp"
#include "table.h"

using namespace cutrank;
using cutrank::cli::parse_csv;
using cutrank::cli::run_cli;

namespace {

const std::string kData = CUTRANK_TEST_DATA;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "cutrank_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string write_graph(const std::string& name, const Graph& g) {
    auto path = scratch(name);
    write_edge_list_file(path, g);
    return path.string();
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Parsed CSV as a list of column-name -> value maps, checking the shape.
std::vector<std::map<std::string, std::string>> records(const std::string& csv) {
    auto rows = parse_csv(csv);
    EXPECT_FALSE(rows.empty());
    std::vector<std::map<std::string, std::string>> out;
    for (std::size_t r = 1; r < rows.size(); r++) {
        EXPECT_EQ(rows[r].size(), rows[0].size());
        std::map<std::string, std::string> rec;
        for (std::size_t c = 0; c < rows[0].size(); c++) {
            rec[rows[0][c]] = rows[r][c];
        }
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace

TEST(cli_rank, example) {
    auto r = invoke({"rank", kData + "/example.edges", "--x", "0,1,2"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "2\n");
}

TEST(cli_rank, symmetric_in_the_two_sides) {
    auto a = invoke({"rank", kData + "/example.edges", "--x", "0,4"});
    auto b = invoke({"rank", kData + "/example.edges", "--x", "1,2,3,5"});
    EXPECT_EQ(a.out, b.out);
}

TEST(cli_rank, empty_graph_and_grid_cut) {
    auto empty = write_graph("empty.edges", Graph(5));
    EXPECT_EQ(invoke({"rank", empty, "--x", "0,1"}).out, "0\n");
    auto grid = scratch("grid5.edges").string();
    ASSERT_EQ(invoke({"--out", grid, "gen", "--family", "grid", "--rows", "5", "--cols", "5"}).code, 0);
    // Columns 0 and 1 against the rest.
    EXPECT_EQ(invoke({"rank", grid, "--x", "0,1,5,6,10,11,15,16,20,21"}).out, "5\n");
    // The first twelve vertices in row-major order.
    EXPECT_EQ(invoke({"rank", grid, "--x", "0,1,2,3,4,5,6,7,8,9,10,11"}).out, "5\n");
}

TEST(cli_rank, formats) {
    auto j = invoke({"--format", "json", "rank", kData + "/example.edges", "--x", "2,1,0"});
    auto parsed = nlohmann::json::parse(j.out);
    EXPECT_EQ(parsed["rank"], 2);
    EXPECT_EQ(parsed["y"], nlohmann::json::parse("[3,4,5]"));
    auto c = invoke({"rank", kData + "/example.edges", "--x", "0,1,2", "--format", "csv"});
    auto rec = records(c.out);
    ASSERT_EQ(rec.size(), 1u);
    EXPECT_EQ(rec[0]["schema"], "rank/1");
    EXPECT_EQ(rec[0]["rank"], "2");
}

TEST(cli_rank, random_partition_from_seed) {
    auto a = invoke({"--seed", "4", "--format", "json", "rank", kData + "/example.edges", "--size", "3"});
    auto b = invoke({"rank", kData + "/example.edges", "--size", "3", "--seed", "4", "--format", "json"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(nlohmann::json::parse(a.out)["x"].size(), 3u);
}

TEST(cli_errors, exit_codes) {
    EXPECT_EQ(invoke({}).code, 1);
    EXPECT_EQ(invoke({"nonsense"}).code, 1);
    EXPECT_EQ(invoke({"rank"}).code, 1);
    EXPECT_EQ(invoke({"rank", kData + "/example.edges"}).code, 1);
    EXPECT_EQ(invoke({"rank", kData + "/example.edges", "--x", "0,9"}).code, 1);
    EXPECT_EQ(invoke({"rank", kData + "/example.edges", "--x", "0,0"}).code, 1);
    EXPECT_EQ(invoke({"rank", kData + "/example.edges", "--x", "0", "--size", "2"}).code, 1);
    EXPECT_EQ(invoke({"--format", "xml", "rank", kData + "/example.edges", "--x", "0"}).code, 1);
    EXPECT_EQ(invoke({"anneal", kData + "/example.edges", "--backend", "fast"}).code, 1);
    EXPECT_EQ(invoke({"anneal", kData + "/example.edges", "--schedule", "1,-1"}).code, 1);
    EXPECT_EQ(invoke({"anneal", kData + "/example.edges", "--size", "6"}).code, 1);
    EXPECT_EQ(invoke({"gen", "--family", "grid"}).code, 1);
    EXPECT_EQ(invoke({"gen", "--family", "er", "--n", "5", "--c", "1", "--p", "0.5"}).code, 1);
    auto missing = invoke({"rank", "/nonexistent/file.edges", "--x", "0"});
    EXPECT_EQ(missing.code, 2);
    EXPECT_NE(missing.err.find("error"), std::string::npos);
    std::ofstream(scratch("bad.edges")) << "3 1\n0 0\n";
    EXPECT_EQ(invoke({"rank", scratch("bad.edges").string(), "--x", "0"}).code, 2);
    EXPECT_EQ(invoke({"gen", "--family", "qaoa", "--hamiltonian", "/nonexistent.json"}).code, 2);
    EXPECT_EQ(invoke({"--out", "/nonexistent/dir/x.csv", "rank", kData + "/example.edges", "--x", "0"}).code, 2);
}

TEST(cli_help, exits_zero) {
    auto r = invoke({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("anneal"), std::string::npos);
    EXPECT_EQ(invoke({"anneal", "--help"}).code, 0);
}

TEST(cli_gen, grid) {
    auto r = invoke({"gen", "--family", "grid", "--rows", "3", "--cols", "3"});
    ASSERT_EQ(r.code, 0);
    std::stringstream ss(r.out);
    Graph g = read_edge_list(ss);
    EXPECT_EQ(g.num_vertices(), 9u);
    EXPECT_EQ(g.num_edges(), 12u);
}

TEST(cli_gen, er_is_deterministic) {
    auto a = invoke({"gen", "--family", "er", "--n", "100", "--c", "2", "--seed", "7"});
    auto b = invoke({"--seed", "7", "gen", "--family", "er", "--n", "100", "--c", "2"});
    auto c = invoke({"gen", "--family", "er", "--n", "100", "--c", "2", "--seed", "8"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, c.out);
}

TEST(cli_gen, qaoa_example) {
    auto r = invoke({"gen", "--family", "qaoa", "--hamiltonian", kData + "/qaoa6.json"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::stringstream ss(r.out);
    Graph g = read_edge_list(ss);
    EXPECT_EQ(g.num_vertices(), 12u);
    EXPECT_EQ(g.num_edges(), 18u);
    auto rnd = invoke({"gen", "--family", "qaoa", "--qubits", "10", "--terms", "20", "--locality", "2"});
    std::stringstream ss2(rnd.out);
    EXPECT_EQ(read_edge_list(ss2).num_vertices(), 30u);
}

TEST(cli_anneal, grid3_finds_rank_3) {
    auto grid = write_graph("grid3.edges", [] {
        std::stringstream ss(invoke({"gen", "--family", "grid", "--rows", "3", "--cols", "3"}).out);
        return read_edge_list(ss);
    }());
    auto r = invoke({"anneal", grid, "--restarts", "10"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rec = records(r.out);
    ASSERT_EQ(rec.size(), 10u);
    int best = 100;
    for (auto& row : rec) {
        EXPECT_EQ(row["schema"], "run/1");
        EXPECT_EQ(row["size"], "4");
        best = std::min(best, std::stoi(row["best_rank"]));
    }
    EXPECT_EQ(best, 3);
    EXPECT_NE(r.err.find("best rank 3"), std::string::npos);
}

TEST(cli_anneal, backends_agree_and_output_is_deterministic) {
    auto grid = scratch("grid6.edges").string();
    ASSERT_EQ(invoke({"gen", "--family", "grid", "--rows", "6", "--cols", "6", "--out", grid}).code, 0);
    auto inc = records(invoke({"anneal", grid, "--seed", "11", "--restarts", "3"}).out);
    auto nav = records(invoke({"anneal", grid, "--seed", "11", "--restarts", "3", "--backend", "naive"}).out);
    ASSERT_EQ(inc.size(), nav.size());
    for (std::size_t k = 0; k < inc.size(); k++) {
        EXPECT_EQ(inc[k]["best_rank"], nav[k]["best_rank"]);
        EXPECT_EQ(inc[k]["final_rank"], nav[k]["final_rank"]);
        EXPECT_EQ(inc[k]["best_partition"], nav[k]["best_partition"]);
        EXPECT_EQ(nav[k]["backend"], "naive");
    }
    auto live = records(invoke({"anneal", grid, "--seed", "11", "--live-iteration"}).out);
    ASSERT_EQ(live.size(), 1u);
    EXPECT_EQ(live[0]["size"], "18");
    auto a = invoke({"anneal", grid, "--seed", "11", "--restarts", "3", "--no-timing", "--jobs", "2"});
    auto b = invoke({"anneal", grid, "--seed", "11", "--restarts", "3", "--no-timing"});
    EXPECT_EQ(a.out, b.out);
}

TEST(cli_anneal, json_output) {
    auto r = invoke({"--format", "json", "anneal", kData + "/example.edges", "--restarts", "2", "--self-check"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["schema"], "run/1");
    EXPECT_GE(j[0]["anneal_ms"].get<double>(), 0.0);
    EXPECT_EQ(j[1]["seed"], 1);
}

TEST(cli_bench, one_row_per_point_and_backend) {
    auto r = invoke({"bench", "--family", "grid", "--n-range", "4..6", "--repeats", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rec = records(r.out);
    ASSERT_EQ(rec.size(), 6u);
    for (std::size_t k = 0; k < rec.size(); k++) {
        EXPECT_EQ(rec[k]["schema"], "bench/1");
        EXPECT_EQ(rec[k]["param"], std::to_string(4 + k / 2));
        EXPECT_EQ(rec[k]["backend"], k % 2 ? "naive" : "incremental");
        EXPECT_EQ(rec[k]["best_rank"], std::to_string(4 + k / 2));
        EXPECT_LE(std::stod(rec[k]["min_ms"]), std::stod(rec[k]["median_ms"]));
        EXPECT_LE(std::stod(rec[k]["median_ms"]), std::stod(rec[k]["max_ms"]));
    }
    auto er = records(invoke({"bench", "--family", "er", "--n-range", "30", "--backends", "naive"}).out);
    ASSERT_EQ(er.size(), 1u);
    EXPECT_EQ(er[0]["speedup"], "");
    EXPECT_EQ(invoke({"bench", "--n-range", "9..3"}).code, 1);
}

TEST(cli_distribute, example) {
    auto r = invoke({"distribute", kData + "/example.edges", "--x", "0,1,2"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["rank"], 2);
    EXPECT_EQ(j["pairs"].size(), 2u);
    EXPECT_EQ(j["verified"], true);
    EXPECT_EQ(j["cross_edges_after"], 2);
}

TEST(cli_distribute, zero_cut_and_files) {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    auto path = write_graph("two_edges.edges", g);
    auto j = nlohmann::json::parse(invoke({"distribute", path, "--x", "0,1"}).out);
    EXPECT_EQ(j["rank"], 0);
    EXPECT_TRUE(j["pairs"].empty());

    auto prefix = scratch("example_plan").string();
    auto r = invoke({"distribute", kData + "/example.edges", "--x", "0,1,2", "--out", prefix});
    ASSERT_EQ(r.code, 0) << r.err;
    Graph embedded = read_edge_list_file(prefix + ".edges");
    EXPECT_EQ(embedded.num_vertices(), 10u);
    EXPECT_EQ(nlohmann::json::parse(slurp(prefix + ".json"))["recovery_sequence"],
              nlohmann::json::parse("[6,7,6,8,9,8]"));
}

TEST(cli_distribute, qaoa_rank_three_partition) {
    auto q = scratch("qaoa6.edges").string();
    ASSERT_EQ(invoke({"gen", "--family", "qaoa", "--hamiltonian", kData + "/qaoa6.json", "--out", q}).code, 0);
    auto j = nlohmann::json::parse(invoke({"distribute", q, "--x", "0,1,6,7,8,11"}).out);
    EXPECT_EQ(j["rank"], 3);
    EXPECT_EQ(j["pairs"].size(), 3u);
    EXPECT_EQ(j["cross_edges_after"], 3);
    auto opt = nlohmann::json::parse(invoke({"distribute", q, "--optimize", "--restarts", "20"}).out);
    EXPECT_EQ(opt["rank"], 3);
    EXPECT_EQ(opt["verified"], true);
}

TEST(cli_experiment, sparse_sweep) {
    auto cfg = scratch("sparse.json");
    std::ofstream(cfg) << R"({"c": 2, "p1": 0.5, "n": [20, 40, 60], "instances": 10})";
    auto dir = scratch("sparse_out");
    auto r = invoke({"experiment", "--name", "sparse-sweep", "--config", cfg.string(), "--out", dir.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    auto summary = records(slurp(dir / "sparse-sweep_summary.csv"));
    ASSERT_EQ(summary.size(), 3u);
    EXPECT_EQ(summary[0]["n"], "20");
    EXPECT_EQ(summary[2]["n"], "60");
    EXPECT_GE(std::stod(summary[2]["mean_best_rank"]), 0.0);
    EXPECT_EQ(records(slurp(dir / "sparse-sweep_runs.csv")).size(), 30u);
    EXPECT_EQ(r.out, slurp(dir / "sparse-sweep_summary.csv"));
}

TEST(cli_experiment, qaoa_sweep_reproduces_example) {
    auto cfg = scratch("qaoa.json");
    std::ofstream(cfg) << R"({"qubits": 12, "terms": [10, 20], "instances": 2, "schedules": ["default", "fine"]})";
    auto dir = scratch("qaoa_out");
    auto r = invoke({"experiment", "--name", "qaoa-sweep", "--config", cfg.string(), "--out", dir.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    auto summary = records(r.out);
    ASSERT_EQ(summary.size(), 5u);
    EXPECT_EQ(summary[4]["family"], "qaoa-example");
    EXPECT_EQ(summary[4]["min_best_rank"], "3");
    for (auto& row : summary) {
        EXPECT_LE(std::stoi(row["max_best_rank"]), std::stoi(row["qubits"]));
    }
    EXPECT_EQ(summary[0]["hamiltonian_model"], "uniform-distinct-k-subsets");
}

TEST(cli_experiment, grid_sweep_json_and_bad_config) {
    auto cfg = scratch("grid.json");
    std::ofstream(cfg) << R"({"n_min": 3, "n_max": 5, "restarts": 5})";
    auto dir = scratch("grid_out");
    auto r = invoke({"--format", "json", "experiment", "--name", "grid-sweep", "--config", cfg.string(), "--out",
                  dir.string(), "--no-timing"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(slurp(dir / "grid-sweep_summary.json"));
    ASSERT_EQ(j.size(), 3u);
    EXPECT_EQ(j[2]["known_min_rank"], 5);
    EXPECT_EQ(j[2]["mean_anneal_ms"], 0.0);
    EXPECT_EQ(nlohmann::json::parse(slurp(dir / "grid-sweep_runs.json")).size(), 15u);

    auto bad = scratch("bad_config.json");
    std::ofstream(bad) << R"({"restarts": "many"})";
    EXPECT_EQ(invoke({"experiment", "--name", "grid-sweep", "--config", bad.string(), "--out", dir.string()}).code, 2);
    std::ofstream(bad) << "{not json";
    EXPECT_EQ(invoke({"experiment", "--name", "grid-sweep", "--config", bad.string(), "--out", dir.string()}).code, 2);
    EXPECT_EQ(invoke({"experiment", "--name", "nope"}).code, 1);
}

TEST(csv, round_trip_with_quoting) {
    cutrank::cli::Table t{"demo/1", {"a", "b"}, {}};
    t.add_row({std::string("x,y"), 1.0 / 3.0});
    t.add_row({std::string("say \"hi\""), std::int64_t{7}});
    std::ostringstream ss;
    cutrank::cli::write_csv(ss, t);
    auto rows = parse_csv(ss.str());
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"schema", "a", "b"}));
    EXPECT_EQ(rows[1], (std::vector<std::string>{"demo/1", "x,y", "0.333333"}));
    EXPECT_EQ(rows[2], (std::vector<std::string>{"demo/1", "say \"hi\"", "7"}));
    EXPECT_EQ(cutrank::cli::format_number(123456789.0), "1.23457e+08");
    EXPECT_THROW(t.add_row({std::int64_t{1}}), std::logic_error);
}
