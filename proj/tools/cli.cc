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

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cutrank/anneal.h"
#include "cutrank/cut_rank_state.h"
#include "cutrank/distribute.h"
#include "cutrank/generators.h"
#include "cutrank/graph_io.h"
#include "experiments.h"
#include "json.hpp"
#include "table.h"

namespace cutrank::cli {

namespace {

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
    std::string out;
    std::string format;
    bool no_timing = false;

    bool json() const { return format == "json"; }

    /// Zeroes every timing-derived column so output is byte-reproducible.
    void scrub(Table& t) const {
        if (!no_timing) {
            return;
        }
        for (std::size_t c = 0; c < t.columns.size(); c++) {
            const auto& name = t.columns[c];
            if (name == "speedup" || (name.size() > 3 && name.compare(name.size() - 3, 3, "_ms") == 0)) {
                for (auto& row : t.rows) {
                    row[c] = 0.0;
                }
            }
        }
    }
};

/// Writes to --out when given, else to the default stream.
void emit(const Globals& g, std::ostream& fallback, const std::function<void(std::ostream&)>& fn) {
    if (g.out.empty() || g.out == "-") {
        fn(fallback);
        return;
    }
    std::ofstream f(g.out);
    if (!f) {
        throw IoError("cannot open '" + g.out + "' for writing");
    }
    fn(f);
    if (!f) {
        throw IoError("failed writing '" + g.out + "'");
    }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path);
    if (!f || !(f << text)) {
        throw IoError("cannot write '" + path.string() + "'");
    }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Partition given either explicitly or as a seeded random subset.
struct PartitionSpec {
    std::vector<std::size_t> x;
    std::optional<std::size_t> size;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--x", x, "Vertices of X, comma separated")->delimiter(',');
        cmd->add_option("--size", size, "Random X of this size drawn from --seed");
    }

    std::vector<Vertex> resolve(const Graph& g, std::uint64_t seed) const {
        if (!x.empty() && size) {
            throw UsageError("give either --x or --size, not both");
        }
        if (!x.empty()) {
            std::vector<Vertex> out(x.begin(), x.end());
            std::sort(out.begin(), out.end());
            if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
                throw UsageError("--x repeats a vertex");
            }
            if (out.back() >= g.num_vertices()) {
                throw UsageError("--x names vertex " + std::to_string(out.back()) + " but the graph has " +
                                 std::to_string(g.num_vertices()) + " vertices");
            }
            return out;
        }
        if (size) {
            if (*size > g.num_vertices()) {
                throw UsageError("--size exceeds the vertex count");
            }
            return initial_partition(g.num_vertices(), *size, seed);
        }
        throw UsageError("a partition is required: --x or --size");
    }
};

Backend backend_or_throw(const std::string& name) {
    auto b = parse_backend(name);
    if (!b) {
        throw UsageError("unknown backend '" + name + "'");
    }
    return *b;
}

Schedule schedule_or_throw(const std::string& text) {
    try {
        return parse_schedule(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// ---- rank -------------------------------------------------------------------

struct RankCmd {
    std::string graph;
    PartitionSpec part;

    void run(const Globals& g, std::ostream& out) const {
        Graph graph = read_edge_list_file(this->graph);
        auto x = part.resolve(graph, g.seed);
        std::size_t r = naive_cut_rank(graph, x);
        emit(g, out, [&](std::ostream& o) {
            if (g.json()) {
                nlohmann::ordered_json j;
                j["rank"] = r;
                j["x"] = x;
                j["y"] = complement_of(graph.num_vertices(), x);
                o << j.dump() << '\n';
            } else if (g.format == "csv") {
                Table t{"rank/1", {"vertices", "edges", "size", "rank", "x"}, {}};
                t.add_row({static_cast<std::int64_t>(graph.num_vertices()),
                           static_cast<std::int64_t>(graph.num_edges()), static_cast<std::int64_t>(x.size()),
                           static_cast<std::int64_t>(r), join(x, ';')});
                write_csv(o, t);
            } else {
                o << r << '\n';
            }
        });
    }
};

// ---- anneal -----------------------------------------------------------------

struct AnnealCmd {
    std::string graph;
    std::optional<std::size_t> size;
    std::string schedule = "default";
    std::size_t restarts = 1;
    std::string backend = "incremental";
    bool live = false;
    bool self_check = false;

    void run(const Globals& g, std::ostream& out, std::ostream& err) const {
        auto t0 = std::chrono::steady_clock::now();
        Graph graph = read_edge_list_file(this->graph);
        double setup_ms = ms_since(t0);
        AnnealOptions opt;
        opt.schedule = schedule_or_throw(schedule);
        opt.backend = backend_or_throw(backend);
        opt.seed = g.seed;
        opt.live_iteration = live;
        opt.self_check = self_check;
        std::size_t k = size.value_or(graph.num_vertices() / 2);
        if (k < 1 || k + 1 > graph.num_vertices()) {
            throw UsageError("--size must be in [1, |V| - 1]");
        }
        if (restarts == 0) {
            throw UsageError("--restarts must be positive");
        }
        auto summary = anneal_restarts(graph, k, opt, restarts, g.jobs);
        Table t = make_run_table();
        RunInfo info{"anneal",       "file", "path=" + this->graph, schedule, graph.num_vertices(),
                     graph.num_edges(), k,      setup_ms,             opt.backend};
        for (const auto& run : summary.runs) {
            add_run(t, info, run);
        }
        g.scrub(t);
        emit(g, out, [&](std::ostream& o) { write_table(o, t, g.json()); });
        err << "best rank " << summary.best.best_rank << " (seed " << summary.best.seed << ") over " << restarts
            << " restart" << (restarts == 1 ? "" : "s") << '\n';
    }
};

// ---- bench ------------------------------------------------------------------

struct BenchCmd {
    std::string family = "grid";
    std::string n_range;
    std::size_t step = 1;
    std::string backends = "both";
    std::size_t repeats = 3;
    double c = 2.0;
    double p1 = 0.5;
    std::string schedule = "default";
    bool large = false;

    static std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
        auto dots = text.find("..");
        try {
            if (dots == std::string::npos) {
                std::size_t v = std::stoul(text);
                return {v, v};
            }
            return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
        } catch (const std::exception&) {
            throw UsageError("--n-range expects A..B, got '" + text + "'");
        }
    }

    void run(const Globals& g, std::ostream& out) const {
        if (family != "grid" && family != "er") {
            throw UsageError("bench supports --family grid or er");
        }
        std::string range = n_range.empty() ? (family == "grid" ? (large ? "5..20" : "5..12") : "20..150") : n_range;
        auto [lo, hi] = parse_range(range);
        if (lo > hi || lo < 2 || step == 0 || repeats == 0) {
            throw UsageError("bad --n-range, --step or --repeats");
        }
        std::vector<Backend> which;
        if (backends == "both") {
            which = {Backend::kIncremental, Backend::kNaive};
        } else {
            which = {backend_or_throw(backends)};
        }
        Schedule sched = schedule_or_throw(schedule);

        Table t;
        t.schema = "bench/1";
        t.columns = {"family", "param",  "vertices", "edges",  "size",      "backend",
                     "repeats", "median_ms", "min_ms", "max_ms", "best_rank", "speedup"};
        for (std::size_t p = lo; p <= hi; p += step) {
            Graph graph = family == "grid" ? grid_graph(p, p) : erdos_renyi_graph(p, std::min(1.0, c / p), mix_seed(g.seed, p));
            std::size_t n = graph.num_vertices();
            auto k = std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(p1 * n)), 1, n - 1);
            std::vector<double> medians;
            std::vector<std::vector<Cell>> rows;
            for (Backend b : which) {
                std::vector<AnnealResult> runs(repeats);
                for (std::size_t r = 0; r < repeats; r++) {
                    AnnealOptions opt;
                    opt.schedule = sched;
                    opt.backend = b;
                    opt.seed = g.seed + r;
                    runs[r] = anneal(graph, k, opt);
                }
                std::vector<double> ms;
                std::size_t best = SIZE_MAX;
                for (const auto& run : runs) {
                    ms.push_back(run.wall_time_ms);
                    best = std::min(best, run.best_rank);
                }
                std::sort(ms.begin(), ms.end());
                double median = ms.size() % 2 ? ms[ms.size() / 2] : 0.5 * (ms[ms.size() / 2 - 1] + ms[ms.size() / 2]);
                medians.push_back(median);
                rows.push_back({family, static_cast<std::int64_t>(p), static_cast<std::int64_t>(n),
                                static_cast<std::int64_t>(graph.num_edges()), static_cast<std::int64_t>(k),
                                std::string(backend_name(b)), static_cast<std::int64_t>(repeats), median, ms.front(),
                                ms.back(), static_cast<std::int64_t>(best), std::string()});
            }
            if (which.size() == 2) {
                rows[0].back() = medians[1] / medians[0];
                rows[1].back() = 1.0;
            }
            for (auto& row : rows) {
                t.add_row(std::move(row));
            }
        }
        g.scrub(t);
        emit(g, out, [&](std::ostream& o) { write_table(o, t, g.json()); });
    }
};

// ---- gen --------------------------------------------------------------------

struct GenCmd {
    std::string family;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t n = 0;
    std::optional<double> c;
    std::optional<double> p;
    std::string hamiltonian;
    std::size_t qubits = 0;
    std::size_t terms = 0;
    std::size_t locality = 3;

    void run(const Globals& g, std::ostream& out) const {
        Graph graph;
        if (family == "grid") {
            if (rows == 0 || cols == 0) {
                throw UsageError("grid needs --rows and --cols");
            }
            graph = grid_graph(rows, cols);
        } else if (family == "er") {
            if (n == 0 || c.has_value() == p.has_value()) {
                throw UsageError("er needs --n and exactly one of --c, --p");
            }
            double prob = p ? *p : *c / static_cast<double>(n);
            if (!(prob >= 0.0 && prob <= 1.0)) {
                throw UsageError("edge probability must lie in [0, 1]");
            }
            graph = erdos_renyi_graph(n, prob, g.seed);
        } else if (family == "qaoa") {
            Hamiltonian h;
            if (!hamiltonian.empty()) {
                h = read_hamiltonian_file(hamiltonian);
            } else if (qubits > 0 && terms > 0) {
                h = random_hamiltonian(qubits, terms, locality, g.seed);
            } else {
                throw UsageError("qaoa needs --hamiltonian FILE or --qubits/--terms");
            }
            graph = qaoa_graph(h).graph;
        } else {
            throw UsageError("unknown family '" + family + "'");
        }
        emit(g, out, [&](std::ostream& o) { write_edge_list(o, graph); });
    }
};

// ---- distribute -------------------------------------------------------------

struct DistributeCmd {
    std::string graph;
    PartitionSpec part;
    bool optimize = false;
    std::size_t restarts = 20;
    std::string schedule = "default";

    void run(const Globals& g, std::ostream& out, std::ostream& err) const {
        Graph graph = read_edge_list_file(this->graph);
        std::vector<Vertex> x;
        if (optimize) {
            if (!part.x.empty()) {
                throw UsageError("--optimize takes --size, not --x");
            }
            std::size_t k = part.size.value_or(graph.num_vertices() / 2);
            if (k < 1 || k + 1 > graph.num_vertices()) {
                throw UsageError("--size must be in [1, |V| - 1]");
            }
            AnnealOptions opt;
            opt.schedule = schedule_or_throw(schedule);
            opt.seed = g.seed;
            x = anneal_restarts(graph, k, opt, std::max<std::size_t>(restarts, 1), g.jobs).best.best_partition;
        } else {
            x = part.resolve(graph, g.seed);
        }
        if (x.size() >= graph.num_vertices() || x.empty()) {
            throw UsageError("both sides of the partition must be nonempty");
        }
        DistributionPlan plan = plan_distribution(graph, x);
        bool ok = verify_recovery(plan);
        auto j = nlohmann::ordered_json::parse(plan_to_json(plan));
        j["verified"] = ok;
        j["cross_edges_before"] = count_cross_edges(graph, plan.x);
        j["cross_edges_after"] = count_cross_edges(plan.embedded, plan.qpu_a);
        if (g.out.empty() || g.out == "-") {
            out << j.dump(2) << '\n';
        } else {
            write_file(g.out + ".edges", to_edge_list(plan.embedded));
            write_file(g.out + ".json", j.dump(2) + "\n");
            out << "rank " << plan.rank << ", " << plan.ancilla_pairs.size() << " ancilla pairs, recovery "
                << (ok ? "verified" : "FAILED") << '\n';
        }
        if (!ok) {
            err << "error: recovery check failed\n";
            throw std::logic_error("recovery check failed");
        }
    }
};

// ---- experiment -------------------------------------------------------------

struct ExperimentCmd {
    std::string name;
    std::string config;
    bool large = false;

    void run(const Globals& g, std::ostream& out) const {
        nlohmann::json cfg;
        if (!config.empty()) {
            std::ifstream f(config);
            if (!f) {
                throw IoError("cannot open config '" + config + "'");
            }
            try {
                cfg = nlohmann::json::parse(f);
            } catch (const nlohmann::json::exception& e) {
                throw ParseError("config '" + config + "': " + e.what());
            }
        }
        ExperimentSettings s{g.seed, g.jobs, large};
        ExperimentOutput res;
        try {
            if (name == "grid-sweep") {
                res = run_grid_sweep(cfg, s);
            } else if (name == "sparse-sweep") {
                res = run_sparse_sweep(cfg, s);
            } else if (name == "qaoa-sweep") {
                res = run_qaoa_sweep(cfg, s);
            } else {
                throw UsageError("unknown experiment '" + name + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("config: ") + e.what());
        }
        std::filesystem::path dir = g.out.empty() ? "results" : g.out;
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) {
            throw IoError("cannot create '" + dir.string() + "': " + ec.message());
        }
        std::string ext = g.json() ? ".json" : ".csv";
        g.scrub(res.runs);
        g.scrub(res.summary);
        std::ostringstream runs;
        std::ostringstream summary;
        write_table(runs, res.runs, g.json());
        write_table(summary, res.summary, g.json());
        write_file(dir / (name + "_runs" + ext), runs.str());
        write_file(dir / (name + "_summary" + ext), summary.str());
        out << summary.str();
    }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fixed-size graph bipartitions of minimum cut rank", "cutrank"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "Base random seed")->capture_default_str();
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--out", g.out, "Output file (rank, anneal, bench, gen), prefix (distribute) or directory (experiment)");
    app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--no-timing", g.no_timing, "Write 0 for all timing columns");

    RankCmd rank;
    auto* rank_cmd = app.add_subcommand("rank", "Print the cut rank of a partition")->fallthrough();
    rank_cmd->add_option("graph", rank.graph, "Edge-list file")->required();
    rank.part.add_options(rank_cmd);

    AnnealCmd ann;
    auto* ann_cmd = app.add_subcommand("anneal", "Search for a minimum cut-rank partition")->fallthrough();
    ann_cmd->add_option("graph", ann.graph, "Edge-list file")->required();
    ann_cmd->add_option("--size", ann.size, "|X| (default |V|/2)");
    ann_cmd->add_option("--schedule", ann.schedule, "default, fine, A:B:STEPS or T1,T2,...")->capture_default_str();
    ann_cmd->add_option("--restarts", ann.restarts, "Runs with seeds seed, seed+1, ...")->capture_default_str();
    ann_cmd->add_option("--backend", ann.backend, "incremental or naive")->capture_default_str();
    ann_cmd->add_flag("--live-iteration", ann.live, "Iterate live X/Y slots instead of snapshots");
    ann_cmd->add_flag("--self-check", ann.self_check, "Verify the key matrices after every swap");

    BenchCmd bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time both backends on a graph family")->fallthrough();
    bench_cmd->add_option("--family", bench.family, "grid or er")->capture_default_str();
    bench_cmd->add_option("--n-range", bench.n_range, "A..B: grid side or ER vertex count");
    bench_cmd->add_option("--step", bench.step)->capture_default_str();
    bench_cmd->add_option("--backends", bench.backends, "both, incremental or naive")->capture_default_str();
    bench_cmd->add_option("--repeats", bench.repeats, "Runs per point; the median is reported")->capture_default_str();
    bench_cmd->add_option("--c", bench.c, "ER edge probability is c/n")->capture_default_str();
    bench_cmd->add_option("--p1", bench.p1, "|X| as a fraction of |V|")->capture_default_str();
    bench_cmd->add_option("--schedule", bench.schedule)->capture_default_str();
    bench_cmd->add_flag("--large", bench.large, "Default grid range up to 20x20");

    GenCmd gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph as an edge list")->fallthrough();
    gen_cmd->add_option("--family", gen.family, "grid, er or qaoa")->required();
    gen_cmd->add_option("--rows", gen.rows);
    gen_cmd->add_option("--cols", gen.cols);
    gen_cmd->add_option("--n", gen.n);
    gen_cmd->add_option("--c", gen.c, "Edge probability c/n");
    gen_cmd->add_option("--p", gen.p, "Edge probability");
    gen_cmd->add_option("--hamiltonian", gen.hamiltonian, "Hamiltonian JSON file");
    gen_cmd->add_option("--qubits", gen.qubits, "Random Hamiltonian: qubit count");
    gen_cmd->add_option("--terms", gen.terms, "Random Hamiltonian: term count");
    gen_cmd->add_option("--locality", gen.locality, "Random Hamiltonian: qubits per term")->capture_default_str();

    DistributeCmd dist;
    auto* dist_cmd = app.add_subcommand("distribute", "Embed a partition with ancilla pairs")->fallthrough();
    dist_cmd->add_option("graph", dist.graph, "Edge-list file")->required();
    dist.part.add_options(dist_cmd);
    dist_cmd->add_flag("--optimize", dist.optimize, "Anneal for the partition first");
    dist_cmd->add_option("--restarts", dist.restarts, "Restarts with --optimize")->capture_default_str();
    dist_cmd->add_option("--schedule", dist.schedule, "Schedule with --optimize")->capture_default_str();

    ExperimentCmd exp;
    auto* exp_cmd = app.add_subcommand("experiment", "Run a sweep and write CSV tables")->fallthrough();
    exp_cmd->add_option("--name", exp.name, "grid-sweep, sparse-sweep or qaoa-sweep")
        ->required()
        ->check(CLI::IsMember({"grid-sweep", "sparse-sweep", "qaoa-sweep"}));
    exp_cmd->add_option("--config", exp.config, "JSON config file");
    exp_cmd->add_flag("--large", exp.large, "Larger default ranges");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (rank_cmd->parsed()) {
            rank.run(g, out);
        } else if (ann_cmd->parsed()) {
            ann.run(g, out, err);
        } else if (bench_cmd->parsed()) {
            bench.run(g, out);
        } else if (gen_cmd->parsed()) {
            gen.run(g, out);
        } else if (dist_cmd->parsed()) {
            dist.run(g, out, err);
        } else if (exp_cmd->parsed()) {
            exp.run(g, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace cutrank::cli
