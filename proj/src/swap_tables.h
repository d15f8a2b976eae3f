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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "cutrank/cut_rank_state.h"

namespace cutrank::detail {

/// Symbolic vertex slots appearing in the extension tables.
enum class Slot : std::uint8_t { kI, kJ, kK1, kK2, kK3, kL1, kL2, kL3, kAlpha, kBeta };

struct SlotList {
    std::array<Slot, 4> slots{};
    std::uint8_t size = 0;
};

struct TableRow {
    int delta;
    SlotList add_x;
    SlotList add_y;
};

struct CaseTable {
    std::string_view name;
    int case_number;
    // Reduction: removed_x[t] leaves X^B together with removed_y[t] leaving Y^B.
    SlotList removed_x;
    SlotList removed_y;
    std::size_t first_row;
    std::size_t num_rows;
};

const CaseTable& case_table(SwapCase c);
const TableRow& table_row(std::size_t flat_index);

}  // namespace cutrank::detail
