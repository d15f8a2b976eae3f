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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cutrank/graph.h"

namespace cutrank {

/// Decreasing list of positive annealing temperatures.
struct Schedule {
    std::vector<double> temperatures;

    /// `steps` equidistant temperatures from start to stop, both included.
    static Schedule linear(double start, double stop, std::size_t steps);
    /// 1.0, 0.9, ..., 0.1.
    static Schedule standard();
    /// 100 equidistant steps from 1.0 to 0.1.
    static Schedule fine();

    /// Throws std::invalid_argument if empty or any temperature is not > 0.
    void validate() const;
};

/// Accepts "default", "fine", "start:stop:steps", or a comma-separated list.
Schedule parse_schedule(std::string_view text);

enum class Backend : std::uint8_t { kIncremental, kNaive };

std::string_view backend_name(Backend b);
std::optional<Backend> parse_backend(std::string_view name);

struct AnnealOptions {
    Schedule schedule = Schedule::standard();
    std::uint64_t seed = 0;
    Backend backend = Backend::kIncremental;
    /// Iterate the live X and Y (a swapped-in vertex takes the slot of the
    /// vertex it replaced) instead of per-loop snapshots.
    bool live_iteration = false;
    /// Incremental backend only: verify every key matrix after each swap.
    bool self_check = false;
    bool record_trace = false;
    /// Record every accepted swap (i, j) in order.
    bool record_path = false;
};

struct TraceStep {
    double temperature = 0.0;
    std::size_t rank = 0;
    std::size_t accepted = 0;
    std::size_t evaluated = 0;
};

struct AnnealResult {
    std::uint64_t seed = 0;
    std::vector<Vertex> initial_partition;
    std::size_t initial_rank = 0;
    std::vector<Vertex> best_partition;
    std::size_t best_rank = 0;
    std::vector<Vertex> final_partition;
    std::size_t final_rank = 0;
    std::size_t accepted_swaps = 0;
    std::size_t evaluated_swaps = 0;
    double wall_time_ms = 0.0;
    std::vector<TraceStep> trace;
    std::vector<std::pair<Vertex, Vertex>> path;
    /// Count of evaluated swaps per extension-table row (incremental backend;
    /// empty for the naive backend).
    std::vector<std::size_t> case_histogram;
};

/// The seeded uniform size-subset that anneal starts from, ascending.
std::vector<Vertex> initial_partition(std::size_t num_vertices, std::size_t size, std::uint64_t seed);

/// Simulated annealing over bipartitions with |X| = part_size.
///
/// The initial X is a seeded uniform part_size-subset. For every temperature
/// T, i sweeps a snapshot of X (ascending) and, for each i still in X, j sweeps
/// a snapshot of V \ X (ascending). Every evaluated swap consumes exactly one
/// uniform u in [0, 1) and is accepted iff exp(-delta / T) > u, so zero-delta
/// swaps are always accepted. Both backends therefore follow the same
/// trajectory for the same seed.
///
/// Throws std::invalid_argument unless 1 <= part_size <= |V| - 1.
AnnealResult anneal(const Graph& g, std::size_t part_size, const AnnealOptions& options);

struct RestartSummary {
    AnnealResult best;  // lowest best_rank; ties go to the lowest seed
    std::vector<AnnealResult> runs;  // ordered by seed
    double mean_initial_rank = 0.0;
    double mean_final_rank = 0.0;
    double mean_best_rank = 0.0;
    std::size_t min_final_rank = 0;
    std::size_t max_final_rank = 0;
    /// Mean of initial_rank - best_rank.
    double mean_improvement = 0.0;
};

/// Runs anneal with seeds options.seed .. options.seed + restarts - 1 on up to
/// `jobs` threads. The result does not depend on `jobs`.
RestartSummary anneal_restarts(const Graph& g, std::size_t part_size, const AnnealOptions& options,
                               std::size_t restarts, std::size_t jobs = 1);

}  // namespace cutrank
