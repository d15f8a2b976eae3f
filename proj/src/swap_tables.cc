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

#include "swap_tables.h"

#include <stdexcept>
#include <string>

namespace cutrank::detail {

namespace {

constexpr Slot I = Slot::kI;
constexpr Slot J = Slot::kJ;
constexpr Slot K1 = Slot::kK1;
constexpr Slot K2 = Slot::kK2;
constexpr Slot K3 = Slot::kK3;
constexpr Slot L1 = Slot::kL1;
constexpr Slot L2 = Slot::kL2;
constexpr Slot L3 = Slot::kL3;
constexpr Slot Al = Slot::kAlpha;
constexpr Slot Be = Slot::kBeta;

constexpr SlotList slots(std::initializer_list<Slot> s) {
    SlotList out;
    for (Slot x : s) {
        out.slots[out.size++] = x;
    }
    return out;
}

constexpr TableRow row(int delta, std::initializer_list<Slot> x, std::initializer_list<Slot> y) {
    return {delta, slots(x), slots(y)};
}

// Rows are listed in the order the dispatch in cut_rank_state.cc selects them.
constexpr std::array<TableRow, 68> kRows = {{
    // Case 1: i in X^F, j in Y^F. Keyed by (P2X, P2Y, F[j,i]).
    row(+2, {J, K2}, {I, L2}),
    row(+1, {K2}, {I}),
    row(+1, {J}, {L2}),
    row(+1, {J}, {I}),
    row(0, {}, {}),
    // Case 2, P1X(i): keyed by (P2X, P2Y, Q), Q = F[j,i] + DX[j,i] F[k1,i].
    row(+2, {J, K1, K2}, {I, Al, L2}),
    row(+1, {K1, K2}, {I, Al}),
    row(+1, {J, K1}, {Al, L2}),
    row(+1, {J, K1}, {I, Al}),
    row(0, {K1}, {Al}),
    // Case 2, not P1X(i): keyed by (DX[j,i], P2X, P2Y, F[j,i]).
    row(+1, {J, K2}, {I, Al}),
    row(0, {J}, {Al}),
    row(+1, {J, K2}, {I, L2}),
    row(0, {K2}, {I}),
    row(0, {J}, {L2}),
    row(0, {J}, {I}),
    row(-1, {}, {}),
    // Case 3, P1Y(j): keyed by (P2Y, P2X, Q), Q = F[j,i] + DY[j,i] F[j,l1].
    row(+2, {J, Be, K2}, {I, L1, L2}),
    row(+1, {J, Be}, {L1, L2}),
    row(+1, {Be, K2}, {I, L1}),
    row(+1, {J, Be}, {I, L1}),
    row(0, {Be}, {L1}),
    // Case 3, not P1Y(j): keyed by (DY[j,i], P2Y, P2X, F[j,i]).
    row(+1, {J, Be}, {I, L2}),
    row(0, {Be}, {I}),
    row(+1, {J, K2}, {I, L2}),
    row(0, {J}, {L2}),
    row(0, {K2}, {I}),
    row(0, {J}, {I}),
    row(-1, {}, {}),
    // Case 4, P1X(i) and P1Y(j): keyed by (P2X, P2Y, Q),
    // Q = F[j,i] + DX[j,i] F[k1,i] + DY[j,i] F[j,l1] + F[k1,i] F[j,l1].
    row(+2, {J, K1, K2}, {I, L1, L2}),
    row(+1, {K1, K2}, {I, L1}),
    row(+1, {J, K1}, {L1, L2}),
    row(+1, {J, K1}, {I, L1}),
    row(0, {K1}, {L1}),
    // Case 4 otherwise: keyed by (P3X, P3Y, Q), Q = F[j,i] + DX[j,i] DY[j,i].
    row(+1, {J, K3}, {I, L3}),
    row(0, {K3}, {I}),
    row(0, {J}, {L3}),
    row(0, {J}, {I}),
    row(-1, {}, {}),
    // Case 5, P1X(i) and P1Y(j): keyed by (P2X, P2Y, Q),
    // Q = F[j,i] + DX[j,i] F[k1,i] + DY[j,i] F[j,l1].
    row(+2, {J, Be, K1, K2}, {I, Al, L1, L2}),
    row(+1, {Be, K1, K2}, {I, Al, L1}),
    row(+1, {J, Be, K1}, {Al, L1, L2}),
    row(+1, {J, Be, K1}, {I, Al, L1}),
    row(0, {Be, K1}, {Al, L1}),
    // Case 5, P1X(i) only: keyed by (P2Y, DY[j,i], P2X, Q), Q = F[j,i] + DX[j,i] F[k1,i].
    row(+1, {J, Be, K1}, {I, Al, L2}),
    row(+1, {J, K1, K2}, {I, Al, L2}),
    row(0, {J, K1}, {Al, L2}),
    row(0, {Be, K1}, {I, Al}),
    row(0, {K1, K2}, {I, Al}),
    row(0, {J, K1}, {I, Al}),
    row(-1, {K1}, {Al}),
    // Case 5, P1Y(j) only: keyed by (P2X, DX[j,i], P2Y, Q), Q = F[j,i] + DY[j,i] F[j,l1].
    row(+1, {J, Be, K2}, {I, Al, L1}),
    row(+1, {J, Be, K2}, {I, L1, L2}),
    row(0, {Be, K2}, {I, L1}),
    row(0, {J, Be}, {Al, L1}),
    row(0, {J, Be}, {L1, L2}),
    row(0, {J, Be}, {I, L1}),
    row(-1, {Be}, {L1}),
    // Case 5, neither: keyed by (DX[j,i], DY[j,i], P2X, P2Y, F[j,i]).
    row(0, {J, Be}, {I, Al}),
    row(0, {J, K2}, {I, Al}),
    row(-1, {J}, {Al}),
    row(0, {J, Be}, {I, L2}),
    row(-1, {Be}, {I}),
    row(0, {J, K2}, {I, L2}),
    row(-1, {K2}, {I}),
    row(-1, {J}, {L2}),
    row(-1, {J}, {I}),
    row(-2, {}, {}),
}};

constexpr std::array<CaseTable, kNumSwapCases> kTables = {{
    {"case1", 1, slots({}), slots({}), 0, 5},
    {"case2/P1", 2, slots({I}), slots({Al}), 5, 5},
    {"case2/no-P1", 2, slots({I}), slots({Al}), 10, 7},
    {"case3/P1", 3, slots({Be}), slots({J}), 17, 5},
    {"case3/no-P1", 3, slots({Be}), slots({J}), 22, 7},
    {"case4/both-P1", 4, slots({I}), slots({J}), 29, 5},
    {"case4/P3", 4, slots({I}), slots({J}), 34, 5},
    {"case5/both-P1", 5, slots({I, Be}), slots({Al, J}), 39, 5},
    {"case5/P1X-only", 5, slots({I, Be}), slots({Al, J}), 44, 7},
    {"case5/P1Y-only", 5, slots({I, Be}), slots({Al, J}), 51, 7},
    {"case5/neither-P1", 5, slots({I, Be}), slots({Al, J}), 58, 10},
}};

constexpr bool tables_consistent() {
    std::size_t next = 0;
    for (const auto& t : kTables) {
        if (t.first_row != next || t.removed_x.size != t.removed_y.size) {
            return false;
        }
        for (std::size_t r = t.first_row; r < t.first_row + t.num_rows; r++) {
            const auto& row = kRows[r];
            if (row.add_x.size != row.add_y.size) {
                return false;
            }
            if (row.delta != int(row.add_x.size) - int(t.removed_x.size)) {
                return false;
            }
        }
        next += t.num_rows;
    }
    return next == kRows.size();
}
static_assert(tables_consistent(), "extension tables disagree with their rank deltas");

}  // namespace

const CaseTable& case_table(SwapCase c) { return kTables[static_cast<std::size_t>(c)]; }

const TableRow& table_row(std::size_t flat_index) { return kRows.at(flat_index); }

}  // namespace cutrank::detail

namespace cutrank {

int case_number(SwapCase c) { return detail::case_table(c).case_number; }

std::size_t num_case_rows() { return detail::kRows.size(); }

std::size_t case_row_index(SwapCase c, std::size_t row) {
    const auto& t = detail::case_table(c);
    if (row >= t.num_rows) {
        throw std::out_of_range("case_row_index: row out of range");
    }
    return t.first_row + row;
}

SwapCase case_of_row(std::size_t flat_index) {
    for (std::size_t c = 0; c < kNumSwapCases; c++) {
        const auto& t = detail::kTables[c];
        if (flat_index < t.first_row + t.num_rows) {
            return static_cast<SwapCase>(c);
        }
    }
    throw std::out_of_range("case_of_row: index out of range");
}

std::string case_row_label(std::size_t flat_index) {
    const auto& t = detail::case_table(case_of_row(flat_index));
    return std::string(t.name) + "/row" + std::to_string(flat_index - t.first_row + 1);
}

int case_row_delta(std::size_t flat_index) { return detail::table_row(flat_index).delta; }

}  // namespace cutrank
