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

#include "cutrank/anneal.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "cutrank/cut_rank_state.h"
#include "cutrank/rng.h"

namespace cutrank {

Schedule Schedule::linear(double start, double stop, std::size_t steps) {
    if (steps == 0) {
        throw std::invalid_argument("Schedule::linear: need at least one step");
    }
    Schedule s;
    for (std::size_t k = 0; k < steps; k++) {
        double t = steps == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(steps - 1);
        s.temperatures.push_back(start + (stop - start) * t);
    }
    return s;
}

Schedule Schedule::standard() {
    Schedule s;
    for (int k = 10; k >= 1; k--) {
        s.temperatures.push_back(k / 10.0);
    }
    return s;
}

Schedule Schedule::fine() { return linear(1.0, 0.1, 100); }

void Schedule::validate() const {
    if (temperatures.empty()) {
        throw std::invalid_argument("schedule is empty");
    }
    for (double t : temperatures) {
        if (!(t > 0.0)) {
            throw std::invalid_argument("schedule temperatures must be positive");
        }
    }
}

namespace {

double parse_double(std::string_view s) {
    std::string tmp(s);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(tmp, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != tmp.size()) {
        throw std::invalid_argument("schedule: bad number '" + tmp + "'");
    }
    return v;
}

}  // namespace

Schedule parse_schedule(std::string_view text) {
    Schedule s;
    if (text == "default" || text == "standard") {
        s = Schedule::standard();
    } else if (text == "fine") {
        s = Schedule::fine();
    } else if (std::count(text.begin(), text.end(), ':') == 2) {
        auto a = text.find(':');
        auto b = text.find(':', a + 1);
        std::string steps_text(text.substr(b + 1));
        std::size_t steps = 0;
        auto [ptr, ec] = std::from_chars(steps_text.data(), steps_text.data() + steps_text.size(), steps);
        if (ec != std::errc() || ptr != steps_text.data() + steps_text.size()) {
            throw std::invalid_argument("schedule: bad step count");
        }
        s = Schedule::linear(parse_double(text.substr(0, a)), parse_double(text.substr(a + 1, b - a - 1)), steps);
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            auto comma = text.find(',', start);
            auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            s.temperatures.push_back(parse_double(piece));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
    }
    s.validate();
    return s;
}

std::string_view backend_name(Backend b) { return b == Backend::kIncremental ? "incremental" : "naive"; }

std::optional<Backend> parse_backend(std::string_view name) {
    if (name == "incremental") {
        return Backend::kIncremental;
    }
    if (name == "naive") {
        return Backend::kNaive;
    }
    return std::nullopt;
}

namespace {

class IncrementalBackend {
   public:
    IncrementalBackend(const Graph& g, std::span<const Vertex> x, bool self_check)
        : state_(g, x), histogram_(num_case_rows(), 0) {
        state_.set_self_check(self_check);
    }

    std::size_t rank() const { return state_.rank(); }
    void begin_row(Vertex i) { row_ = state_.row_profile(i); }
    int delta(Vertex j) {
        last_ = state_.evaluate_swap(row_, j);
        histogram_[last_.case_row]++;
        return last_.delta;
    }
    void apply() { state_.apply_swap(last_); }
    std::vector<std::size_t> take_histogram() { return std::move(histogram_); }

   private:
    CutRankState state_;
    RowProfile row_;
    SwapDelta last_;
    std::vector<std::size_t> histogram_;
};

class NaiveBackend {
   public:
    NaiveBackend(const Graph& g, std::span<const Vertex> x) : g_(g), in_x_(g.num_vertices(), 0) {
        for (Vertex v : x) {
            in_x_[v] = 1;
        }
        rank_ = rank_of(in_x_);
    }

    std::size_t rank() const { return rank_; }
    void begin_row(Vertex i) { i_ = i; }
    int delta(Vertex j) {
        j_ = j;
        in_x_[i_] = 0;
        in_x_[j_] = 1;
        candidate_ = rank_of(in_x_);
        in_x_[i_] = 1;
        in_x_[j_] = 0;
        return static_cast<int>(candidate_) - static_cast<int>(rank_);
    }
    void apply() {
        in_x_[i_] = 0;
        in_x_[j_] = 1;
        rank_ = candidate_;
    }
    std::vector<std::size_t> take_histogram() { return {}; }

   private:
    std::size_t rank_of(const std::vector<std::uint8_t>& in_x) {
        xs_.clear();
        ys_.clear();
        for (Vertex v = 0; v < in_x.size(); v++) {
            (in_x[v] ? xs_ : ys_).push_back(v);
        }
        return cutrank::rank(submatrix(g_.adjacency(), xs_, ys_));
    }

    const Graph& g_;
    std::vector<std::uint8_t> in_x_;
    std::vector<std::size_t> xs_;
    std::vector<std::size_t> ys_;
    std::size_t rank_ = 0;
    std::size_t candidate_ = 0;
    Vertex i_ = kNoVertex;
    Vertex j_ = kNoVertex;
};

std::vector<Vertex> members(const std::vector<std::uint8_t>& in_x, bool want) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < in_x.size(); v++) {
        if ((in_x[v] != 0) == want) {
            out.push_back(v);
        }
    }
    return out;
}

// Partial Fisher-Yates over 0..n-1; the first `size` slots form X.
std::vector<std::uint8_t> draw_partition(Rng& rng, std::size_t n, std::size_t size) {
    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; v++) {
        perm[v] = v;
    }
    for (std::size_t k = 0; k < size; k++) {
        std::swap(perm[k], perm[k + rng.below(n - k)]);
    }
    std::vector<std::uint8_t> in_x(n, 0);
    for (std::size_t k = 0; k < size; k++) {
        in_x[perm[k]] = 1;
    }
    return in_x;
}

template <typename B>
void run_sweeps(B& backend, std::vector<std::uint8_t>& in_x, Rng& rng, const AnnealOptions& opt, AnnealResult& res) {
    std::size_t current = backend.rank();
    auto consider = [&](Vertex i, Vertex j, double temp, TraceStep& step) -> bool {
        int dc = backend.delta(j);
        double u = rng.uniform01();
        res.evaluated_swaps++;
        step.evaluated++;
        if (std::exp(-static_cast<double>(dc) / temp) > u) {
            backend.apply();
            in_x[i] = 0;
            in_x[j] = 1;
            current = static_cast<std::size_t>(static_cast<long>(current) + dc);
            res.accepted_swaps++;
            step.accepted++;
            if (opt.record_path) {
                res.path.emplace_back(i, j);
            }
            if (current < res.best_rank) {
                res.best_rank = current;
                res.best_partition = members(in_x, true);
            }
            return true;
        }
        return false;
    };

    std::vector<Vertex> live_x;
    std::vector<Vertex> live_y;
    if (opt.live_iteration) {
        live_x = members(in_x, true);
        live_y = members(in_x, false);
    }

    for (double temp : opt.schedule.temperatures) {
        TraceStep step;
        step.temperature = temp;
        if (opt.live_iteration) {
            for (std::size_t p = 0; p < live_x.size(); p++) {
                backend.begin_row(live_x[p]);
                for (std::size_t q = 0; q < live_y.size(); q++) {
                    if (consider(live_x[p], live_y[q], temp, step)) {
                        std::swap(live_x[p], live_y[q]);
                        backend.begin_row(live_x[p]);
                    }
                }
            }
        } else {
            const auto xs = members(in_x, true);
            for (Vertex i : xs) {
                if (!in_x[i]) {
                    continue;
                }
                const auto ys = members(in_x, false);
                backend.begin_row(i);
                for (Vertex j : ys) {
                    if (!in_x[i]) {
                        break;
                    }
                    if (in_x[j]) {
                        continue;
                    }
                    consider(i, j, temp, step);
                }
            }
        }
        step.rank = current;
        if (opt.record_trace) {
            res.trace.push_back(step);
        }
    }
    res.final_rank = current;
    res.final_partition = members(in_x, true);
    res.case_histogram = backend.take_histogram();
}

}  // namespace

std::vector<Vertex> initial_partition(std::size_t num_vertices, std::size_t size, std::uint64_t seed) {
    if (size > num_vertices) {
        throw std::invalid_argument("initial_partition: size exceeds vertex count");
    }
    Rng rng(seed);
    return members(draw_partition(rng, num_vertices, size), true);
}

AnnealResult anneal(const Graph& g, std::size_t part_size, const AnnealOptions& options) {
    const std::size_t n = g.num_vertices();
    if (part_size < 1 || part_size + 1 > n) {
        throw std::invalid_argument("anneal: partition size must be in [1, |V| - 1]");
    }
    options.schedule.validate();
    auto start = std::chrono::steady_clock::now();

    Rng rng(options.seed);
    std::vector<std::uint8_t> in_x = draw_partition(rng, n, part_size);

    AnnealResult res;
    res.seed = options.seed;
    res.initial_partition = members(in_x, true);
    if (options.backend == Backend::kIncremental) {
        IncrementalBackend backend(g, res.initial_partition, options.self_check);
        res.initial_rank = res.best_rank = backend.rank();
        res.best_partition = res.initial_partition;
        run_sweeps(backend, in_x, rng, options, res);
    } else {
        NaiveBackend backend(g, res.initial_partition);
        res.initial_rank = res.best_rank = backend.rank();
        res.best_partition = res.initial_partition;
        run_sweeps(backend, in_x, rng, options, res);
    }
    res.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return res;
}

RestartSummary anneal_restarts(const Graph& g, std::size_t part_size, const AnnealOptions& options,
                               std::size_t restarts, std::size_t jobs) {
    if (restarts == 0) {
        throw std::invalid_argument("anneal_restarts: need at least one restart");
    }
    RestartSummary summary;
    summary.runs.resize(restarts);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < restarts; k = next++) {
            AnnealOptions opt = options;
            opt.seed = options.seed + k;
            summary.runs[k] = anneal(g, part_size, opt);
        }
    };
    jobs = std::clamp<std::size_t>(jobs, 1, restarts);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < jobs; t++) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    std::size_t best = 0;
    summary.min_final_rank = summary.runs[0].final_rank;
    summary.max_final_rank = summary.runs[0].final_rank;
    for (std::size_t k = 0; k < restarts; k++) {
        const auto& run = summary.runs[k];
        if (run.best_rank < summary.runs[best].best_rank) {
            best = k;
        }
        summary.mean_initial_rank += static_cast<double>(run.initial_rank);
        summary.mean_final_rank += static_cast<double>(run.final_rank);
        summary.mean_best_rank += static_cast<double>(run.best_rank);
        summary.mean_improvement += static_cast<double>(run.initial_rank) - static_cast<double>(run.best_rank);
        summary.min_final_rank = std::min(summary.min_final_rank, run.final_rank);
        summary.max_final_rank = std::max(summary.max_final_rank, run.final_rank);
    }
    const auto count = static_cast<double>(restarts);
    summary.mean_initial_rank /= count;
    summary.mean_final_rank /= count;
    summary.mean_best_rank /= count;
    summary.mean_improvement /= count;
    summary.best = summary.runs[best];
    return summary;
}

}  // namespace cutrank
