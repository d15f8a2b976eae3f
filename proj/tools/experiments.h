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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cutrank/anneal.h"
#include "json.hpp"
#include "table.h"

namespace cutrank::cli {

/// Identifies one annealing run in the records table.
struct RunInfo {
    std::string experiment;
    std::string family;
    std::string params;
    std::string schedule;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t size = 0;
    double setup_ms = 0.0;
    Backend backend = Backend::kIncremental;
};

/// Schema "run/1": one row per annealing run.
Table make_run_table();
void add_run(Table& t, const RunInfo& info, const AnnealResult& res);

/// Stable per-instance seed derived from a base seed and instance coordinates.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

struct ExperimentOutput {
    Table runs;
    Table summary;
};

struct ExperimentSettings {
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
    bool large = false;
};

/// Config keys, all optional:
///   grid-sweep:   n_min (3), n_max (12, or 20 with large), restarts (100), schedule, backend
///   sparse-sweep: c ([2]), p1 ([0.5]), n ([10, 20, ..., 150]), instances (100), schedule, backend
///   qaoa-sweep:   qubits (40), terms ([100, 150, 200]), locality ([3]), instances (10),
///                 schedules (["default"]), example_restarts (20), backend
/// Unknown keys and ill-typed values throw std::invalid_argument.
ExperimentOutput run_grid_sweep(const nlohmann::json& config, const ExperimentSettings& s);
ExperimentOutput run_sparse_sweep(const nlohmann::json& config, const ExperimentSettings& s);
ExperimentOutput run_qaoa_sweep(const nlohmann::json& config, const ExperimentSettings& s);

}  // namespace cutrank::cli
