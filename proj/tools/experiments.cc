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

#include "experiments.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <stdexcept>

#include "cutrank/cut_rank_state.h"
#include "cutrank/generators.h"
#include "parallel.h"

namespace cutrank::cli {

Table make_run_table() {
    Table t;
    t.schema = "run/1";
    t.columns = {"experiment", "family",      "params",      "vertices",  "edges",    "size",
                 "seed",       "schedule",    "backend",     "initial_rank", "final_rank", "best_rank",
                 "accepted",   "evaluated",   "setup_ms",    "anneal_ms", "cases_hit", "case_histogram",
                 "best_partition"};
    return t;
}

void add_run(Table& t, const RunInfo& info, const AnnealResult& res) {
    auto i64 = [](std::size_t v) { return Cell{static_cast<std::int64_t>(v)}; };
    std::int64_t hit = 0;
    for (auto h : res.case_histogram) {
        hit += h ? 1 : 0;
    }
    t.add_row({info.experiment, info.family, info.params, i64(info.vertices), i64(info.edges), i64(info.size),
               Cell{static_cast<std::int64_t>(res.seed)}, info.schedule, std::string(backend_name(info.backend)),
               i64(res.initial_rank), i64(res.final_rank), i64(res.best_rank), i64(res.accepted_swaps),
               i64(res.evaluated_swaps), info.setup_ms, res.wall_time_ms, Cell{hit}, join(res.case_histogram, ';'),
               join(res.best_partition, ';')});
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    // splitmix64 finalizer folded over the coordinates.
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(mix(mix(base) ^ a) ^ b) ^ c);
}

namespace {

using nlohmann::json;

class Config {
   public:
    Config(const json& j, std::set<std::string> known) : j_(j.is_null() ? json::object() : j) {
        if (!j_.is_object()) {
            throw std::invalid_argument("config must be a JSON object");
        }
        for (const auto& item : j_.items()) {
            if (!known.count(item.key())) {
                throw std::invalid_argument("unknown config key '" + item.key() + "'");
            }
        }
    }

    template <typename T>
    T get(const std::string& key, T fallback) const {
        if (!j_.contains(key)) {
            return fallback;
        }
        try {
            return j_.at(key).get<T>();
        } catch (const json::exception&) {
            throw std::invalid_argument("config key '" + key + "' has the wrong type");
        }
    }

    /// Accepts a scalar or a list.
    template <typename T>
    std::vector<T> list(const std::string& key, std::vector<T> fallback) const {
        if (j_.contains(key) && !j_.at(key).is_array()) {
            return {get<T>(key, T{})};
        }
        return get<std::vector<T>>(key, std::move(fallback));
    }

   private:
    json j_;
};

Backend backend_of(const Config& c) {
    auto name = c.get<std::string>("backend", "incremental");
    auto b = parse_backend(name);
    if (!b) {
        throw std::invalid_argument("unknown backend '" + name + "'");
    }
    return *b;
}

double mean(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) {
        s += x;
    }
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

std::string fmt_params(std::initializer_list<std::pair<const char*, std::string>> kv) {
    std::string out;
    for (const auto& [k, v] : kv) {
        if (!out.empty()) {
            out += ';';
        }
        out += k;
        out += '=';
        out += v;
    }
    return out;
}

}  // namespace

ExperimentOutput run_grid_sweep(const json& config, const ExperimentSettings& s) {
    Config c(config, {"n_min", "n_max", "restarts", "schedule", "backend"});
    auto n_min = c.get<std::size_t>("n_min", 3);
    auto n_max = c.get<std::size_t>("n_max", s.large ? 20 : 12);
    auto restarts = c.get<std::size_t>("restarts", 100);
    auto sched_text = c.get<std::string>("schedule", "default");
    Backend backend = backend_of(c);
    if (n_min < 2 || n_max < n_min || restarts == 0) {
        throw std::invalid_argument("grid-sweep: need 2 <= n_min <= n_max and restarts >= 1");
    }
    AnnealOptions opt;
    opt.schedule = parse_schedule(sched_text);
    opt.backend = backend;

    std::size_t sides = n_max - n_min + 1;
    std::vector<AnnealResult> results(sides * restarts);
    std::vector<Graph> graphs;
    for (std::size_t n = n_min; n <= n_max; n++) {
        graphs.push_back(grid_graph(n, n));
    }
    parallel_for(results.size(), s.jobs, [&](std::size_t k) {
        std::size_t side = k / restarts;
        std::size_t n = n_min + side;
        AnnealOptions o = opt;
        o.seed = s.seed + k % restarts;
        results[k] = anneal(graphs[side], n * n / 2, o);
    });

    ExperimentOutput out{make_run_table(), {}};
    out.summary.schema = "grid-sweep/1";
    out.summary.columns = {"n",          "vertices",      "restarts",      "known_min_rank", "min_best_rank",
                           "max_best_rank", "mean_best_rank", "mean_deviation", "mean_anneal_ms"};
    for (std::size_t side = 0; side < sides; side++) {
        std::size_t n = n_min + side;
        RunInfo info{"grid-sweep", "grid", fmt_params({{"rows", std::to_string(n)}, {"cols", std::to_string(n)}}),
                     sched_text,   n * n,  graphs[side].num_edges(), n * n / 2, 0.0, backend};
        std::vector<double> best;
        std::vector<double> ms;
        std::size_t lo = SIZE_MAX;
        std::size_t hi = 0;
        for (std::size_t r = 0; r < restarts; r++) {
            const auto& res = results[side * restarts + r];
            add_run(out.runs, info, res);
            best.push_back(static_cast<double>(res.best_rank));
            ms.push_back(res.wall_time_ms);
            lo = std::min(lo, res.best_rank);
            hi = std::max(hi, res.best_rank);
        }
        // The minimum cut rank of a balanced n x n grid is n for n >= 3.
        auto known = static_cast<std::int64_t>(n);
        out.summary.add_row({known, static_cast<std::int64_t>(n * n), static_cast<std::int64_t>(restarts), known,
                             static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi), mean(best),
                             mean(best) - static_cast<double>(n), mean(ms)});
    }
    return out;
}

ExperimentOutput run_sparse_sweep(const json& config, const ExperimentSettings& s) {
    Config c(config, {"c", "p1", "n", "instances", "schedule", "backend"});
    std::vector<std::size_t> default_n;
    for (std::size_t n = 10; n <= 150; n += 10) {
        default_n.push_back(n);
    }
    auto cs = c.list<double>("c", {2.0});
    auto p1s = c.list<double>("p1", {0.5});
    auto ns = c.list<std::size_t>("n", default_n);
    auto instances = c.get<std::size_t>("instances", 100);
    auto sched_text = c.get<std::string>("schedule", "default");
    Backend backend = backend_of(c);
    AnnealOptions opt;
    opt.schedule = parse_schedule(sched_text);
    opt.backend = backend;
    for (double p1 : p1s) {
        if (!(p1 > 0.0 && p1 < 1.0)) {
            throw std::invalid_argument("sparse-sweep: p1 must lie in (0, 1)");
        }
    }
    for (std::size_t n : ns) {
        if (n < 2) {
            throw std::invalid_argument("sparse-sweep: n must be at least 2");
        }
    }

    struct Cellkey {
        double c;
        double p1;
        std::size_t n;
    };
    std::vector<Cellkey> keys;
    for (double cv : cs) {
        for (double p1 : p1s) {
            for (std::size_t n : ns) {
                keys.push_back({cv, p1, n});
            }
        }
    }
    struct Slot {
        AnnealResult res;
        std::size_t edges = 0;
        std::size_t size = 0;
        double setup_ms = 0.0;
    };
    std::vector<Slot> slots(keys.size() * instances);
    parallel_for(slots.size(), s.jobs, [&](std::size_t k) {
        const auto& key = keys[k / instances];
        std::size_t inst = k % instances;
        auto t0 = std::chrono::steady_clock::now();
        std::uint64_t gseed = mix_seed(s.seed, key.n, static_cast<std::uint64_t>(key.c * 1000), inst);
        Graph g = erdos_renyi_graph(key.n, std::min(1.0, key.c / static_cast<double>(key.n)), gseed);
        auto t1 = std::chrono::steady_clock::now();
        auto size = static_cast<std::size_t>(std::llround(key.p1 * static_cast<double>(key.n)));
        size = std::clamp<std::size_t>(size, 1, key.n - 1);
        AnnealOptions o = opt;
        o.seed = mix_seed(gseed, 1);
        slots[k] = {anneal(g, size, o), g.num_edges(), size,
                    std::chrono::duration<double, std::milli>(t1 - t0).count()};
    });

    ExperimentOutput out{make_run_table(), {}};
    out.summary.schema = "sparse-sweep/1";
    out.summary.columns = {"c",         "p1",          "n",           "size",         "instances",
                           "mean_edges", "mean_best_rank", "mean_final_rank", "mean_anneal_ms"};
    for (std::size_t q = 0; q < keys.size(); q++) {
        const auto& key = keys[q];
        std::vector<double> edges;
        std::vector<double> best;
        std::vector<double> fin;
        std::vector<double> ms;
        std::size_t size = 0;
        for (std::size_t inst = 0; inst < instances; inst++) {
            const auto& slot = slots[q * instances + inst];
            size = slot.size;
            RunInfo info{"sparse-sweep",
                         "erdos-renyi",
                         fmt_params({{"n", std::to_string(key.n)},
                                     {"c", format_number(key.c)},
                                     {"p1", format_number(key.p1)},
                                     {"instance", std::to_string(inst)}}),
                         sched_text,
                         key.n,
                         slot.edges,
                         slot.size,
                         slot.setup_ms,
                         backend};
            add_run(out.runs, info, slot.res);
            edges.push_back(static_cast<double>(slot.edges));
            best.push_back(static_cast<double>(slot.res.best_rank));
            fin.push_back(static_cast<double>(slot.res.final_rank));
            ms.push_back(slot.res.wall_time_ms);
        }
        out.summary.add_row({key.c, key.p1, static_cast<std::int64_t>(key.n), static_cast<std::int64_t>(size),
                             static_cast<std::int64_t>(instances), mean(edges), mean(best), mean(fin), mean(ms)});
    }
    return out;
}

ExperimentOutput run_qaoa_sweep(const json& config, const ExperimentSettings& s) {
    Config c(config, {"qubits", "terms", "locality", "instances", "schedules", "example_restarts", "backend"});
    auto qubits = c.get<std::size_t>("qubits", 40);
    auto terms = c.list<std::size_t>("terms", {100, 150, 200});
    auto localities = c.list<std::size_t>("locality", {3});
    auto instances = c.get<std::size_t>("instances", 10);
    auto schedules = c.list<std::string>("schedules", {"default"});
    auto example_restarts = c.get<std::size_t>("example_restarts", 20);
    Backend backend = backend_of(c);
    std::vector<Schedule> parsed;
    for (const auto& text : schedules) {
        parsed.push_back(parse_schedule(text));
    }
    const std::string model = "uniform-distinct-k-subsets";

    struct Key {
        std::size_t locality;
        std::size_t terms;
    };
    std::vector<Key> keys;
    for (std::size_t loc : localities) {
        for (std::size_t t : terms) {
            keys.push_back({loc, t});
        }
    }
    struct Slot {
        AnnealResult res;
        std::size_t vertices = 0;
        std::size_t edges = 0;
        double setup_ms = 0.0;
    };
    // Index: ((key * instances) + instance) * schedules + schedule. Every
    // schedule sees the same Hamiltonian and anneal seed.
    std::vector<Slot> slots(keys.size() * instances * parsed.size());
    parallel_for(slots.size(), s.jobs, [&](std::size_t k) {
        std::size_t sched = k % parsed.size();
        std::size_t inst = (k / parsed.size()) % instances;
        const auto& key = keys[k / parsed.size() / instances];
        auto t0 = std::chrono::steady_clock::now();
        std::uint64_t hseed = mix_seed(s.seed, key.terms, key.locality, inst);
        Graph g = qaoa_graph(random_hamiltonian(qubits, key.terms, key.locality, hseed)).graph;
        auto t1 = std::chrono::steady_clock::now();
        AnnealOptions o;
        o.schedule = parsed[sched];
        o.backend = backend;
        o.seed = mix_seed(hseed, 1);
        slots[k] = {anneal(g, g.num_vertices() / 2, o), g.num_vertices(), g.num_edges(),
                    std::chrono::duration<double, std::milli>(t1 - t0).count()};
    });

    ExperimentOutput out{make_run_table(), {}};
    out.summary.schema = "qaoa-sweep/1";
    out.summary.columns = {"family",         "qubits",        "terms",         "locality",      "schedule",
                           "instances",      "runs",          "min_best_rank", "max_best_rank", "mean_best_rank",
                           "mean_anneal_ms", "hamiltonian_model"};

    for (std::size_t q = 0; q < keys.size(); q++) {
        for (std::size_t sched = 0; sched < parsed.size(); sched++) {
            std::vector<double> best;
            std::vector<double> ms;
            std::size_t lo = SIZE_MAX;
            std::size_t hi = 0;
            for (std::size_t inst = 0; inst < instances; inst++) {
                const auto& slot = slots[(q * instances + inst) * parsed.size() + sched];
                RunInfo info{"qaoa-sweep",
                             "qaoa-random",
                             fmt_params({{"qubits", std::to_string(qubits)},
                                         {"terms", std::to_string(keys[q].terms)},
                                         {"locality", std::to_string(keys[q].locality)},
                                         {"instance", std::to_string(inst)},
                                         {"model", model}}),
                             schedules[sched],
                             slot.vertices,
                             slot.edges,
                             slot.vertices / 2,
                             slot.setup_ms,
                             backend};
                add_run(out.runs, info, slot.res);
                best.push_back(static_cast<double>(slot.res.best_rank));
                ms.push_back(slot.res.wall_time_ms);
                lo = std::min(lo, slot.res.best_rank);
                hi = std::max(hi, slot.res.best_rank);
            }
            if (instances == 0) {
                continue;
            }
            out.summary.add_row({std::string("qaoa-random"), static_cast<std::int64_t>(qubits),
                                 static_cast<std::int64_t>(keys[q].terms), static_cast<std::int64_t>(keys[q].locality),
                                 schedules[sched], static_cast<std::int64_t>(instances),
                                 static_cast<std::int64_t>(instances), static_cast<std::int64_t>(lo),
                                 static_cast<std::int64_t>(hi), mean(best), mean(ms), model});
        }
    }

    if (example_restarts > 0) {
        Hamiltonian h = example_qaoa_hamiltonian();
        QaoaGraph qg = qaoa_graph(h);
        AnnealOptions o;
        o.schedule = parsed.front();
        o.backend = backend;
        o.seed = s.seed;
        auto summary = anneal_restarts(qg.graph, qg.graph.num_vertices() / 2, o, example_restarts, s.jobs);
        std::vector<double> ms;
        std::size_t hi = 0;
        for (const auto& run : summary.runs) {
            RunInfo info{"qaoa-sweep",
                         "qaoa-example",
                         fmt_params({{"qubits", std::to_string(h.num_qubits)}, {"terms", std::to_string(h.terms.size())}}),
                         schedules.front(),
                         qg.graph.num_vertices(),
                         qg.graph.num_edges(),
                         qg.graph.num_vertices() / 2,
                         0.0,
                         backend};
            add_run(out.runs, info, run);
            ms.push_back(run.wall_time_ms);
            hi = std::max(hi, run.best_rank);
        }
        out.summary.add_row({std::string("qaoa-example"), static_cast<std::int64_t>(h.num_qubits),
                             static_cast<std::int64_t>(h.terms.size()), std::int64_t{3}, schedules.front(),
                             std::int64_t{1}, static_cast<std::int64_t>(example_restarts),
                             static_cast<std::int64_t>(summary.best.best_rank), static_cast<std::int64_t>(hi),
                             summary.mean_best_rank, mean(ms), std::string("fixed")});
    }
    return out;
}

}  // namespace cutrank::cli
