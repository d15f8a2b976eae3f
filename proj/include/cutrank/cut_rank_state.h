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

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cutrank/bit_matrix.h"
#include "cutrank/graph.h"

namespace cutrank {

/// rank(A[X, V \ X]) by direct Gauss-Jordan elimination.
std::size_t naive_cut_rank(const Graph& g, std::span<const Vertex> x);

/// Which qualifying vertex is used when a witness (k1, k2, k3, l1, l2, l3,
/// alpha, beta) has several candidates. The swap deltas do not depend on it.
enum class WitnessOrder : std::uint8_t { kSmallest, kLargest };

/// At most four vertices; basis edits never exceed that per side.
class VertexList {
   public:
    void push_back(Vertex v) { items_[size_++] = v; }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    Vertex operator[](std::size_t k) const { return items_[k]; }
    const Vertex* begin() const { return items_.data(); }
    const Vertex* end() const { return items_.data() + size_; }
    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    bool operator==(const VertexList& other) const {
        return std::equal(begin(), end(), other.begin(), other.end());
    }

   private:
    std::array<Vertex, 4> items_{};
    std::uint8_t size_ = 0;
};

/// The five swap cases, split by the sub-case that selects the extension table.
enum class SwapCase : std::uint8_t {
    kFreeFree,            // i in X^F, j in Y^F
    kBasisFreeP1,         // i in X^B, j in Y^F, P1X(i)
    kBasisFreeNoP1,       // i in X^B, j in Y^F, not P1X(i)
    kFreeBasisP1,         // i in X^F, j in Y^B, P1Y(j)
    kFreeBasisNoP1,       // i in X^F, j in Y^B, not P1Y(j)
    kPairedBothP1,        // both in basis, Cinv[j,i] = 1, P1X(i) and P1Y(j)
    kPairedOther,         // both in basis, Cinv[j,i] = 1, otherwise
    kUnpairedBothP1,      // both in basis, Cinv[j,i] = 0, P1X(i) and P1Y(j)
    kUnpairedOnlyP1X,     // ... P1X(i) only
    kUnpairedOnlyP1Y,     // ... P1Y(j) only
    kUnpairedNeitherP1,   // ... neither
};
inline constexpr std::size_t kNumSwapCases = 11;

/// Number of the top-level case (1..5) a sub-table belongs to.
int case_number(SwapCase c);

/// Flat index over every row of every extension table.
std::size_t num_case_rows();
std::size_t case_row_index(SwapCase c, std::size_t row);
SwapCase case_of_row(std::size_t flat_index);
/// Human-readable label such as "case5/neither-P1/row3".
std::string case_row_label(std::size_t flat_index);
/// The net rank change the table assigns to a row.
int case_row_delta(std::size_t flat_index);

/// Result of evaluating the swap of i in X with j in Y. The removed lists are
/// paired positionally: removed_from_xb[t] leaves together with
/// removed_from_yb[t].
struct SwapDelta {
    Vertex i = kNoVertex;
    Vertex j = kNoVertex;
    int delta = 0;
    VertexList removed_from_xb;
    VertexList removed_from_yb;
    VertexList added_to_xb;
    VertexList added_to_yb;
    std::size_t case_row = 0;
    std::uint64_t version = 0;
};

/// Per-vertex precomputation for a vertex i in X. Witnesses are kNoVertex
/// when the property does not hold.
struct RowProfile {
    Vertex vertex = kNoVertex;
    bool in_basis = false;
    std::size_t basis_pos = 0;
    Vertex alpha = kNoVertex;  // Cinv[alpha, i] = 1, when i in X^B
    bool p1 = false;
    Vertex k1 = kNoVertex;
    bool p2 = false;
    Vertex k2 = kNoVertex;
    // P3X(i, j) only sees j through DY[j, i]; index 0/1 is that bit.
    std::array<bool, 2> p3{};
    std::array<Vertex, 2> k3{kNoVertex, kNoVertex};
};

/// Mirror of RowProfile for a vertex j in Y.
struct ColumnProfile {
    Vertex vertex = kNoVertex;
    bool in_basis = false;
    std::size_t basis_pos = 0;
    Vertex beta = kNoVertex;  // Cinv[j, beta] = 1, when j in Y^B
    bool p1 = false;
    Vertex l1 = kNoVertex;
    bool p2 = false;
    Vertex l2 = kNoVertex;
    // P3Y(i, j) only sees i through DX[j, i]; index 0/1 is that bit.
    std::array<bool, 2> p3{};
    std::array<Vertex, 2> l3{kNoVertex, kNoVertex};

    bool operator==(const ColumnProfile& other) const = default;
};

/// Incrementally maintained cut rank of a fixed-size bipartition (X, Y).
///
/// Holds basis sets X^B in X and Y^B in Y with C = A[X^B, Y^B] invertible and
/// |X^B| = |Y^B| = rank(A[X, Y]), together with
///   Cinv = C^-1                       (rows Y^B, columns X^B)
///   DX   = A[V, Y^B] Cinv             (n x r, stored transposed)
///   DY   = Cinv A[X^B, V]             (r x n)
///   F    = A[V, Y^B] Cinv A[X^B, V] + A   (n x n, plus its transpose)
/// The rank change of any swap is then a handful of lookups into these
/// matrices, and applying a swap is at most six rank-one corrections.
///
/// Evaluation is read-only and may run concurrently; apply_swap may not. The
/// graph must outlive the state.
class CutRankState {
   public:
    CutRankState(const Graph& g, std::span<const Vertex> x, WitnessOrder order = WitnessOrder::kSmallest);

    const Graph& graph() const { return *graph_; }
    std::size_t num_vertices() const { return n_; }
    std::size_t rank() const { return basis_rows_.size(); }
    std::uint64_t version() const { return version_; }

    bool in_x(Vertex v) const { return in_x_[v] != 0; }
    std::vector<Vertex> x_vertices() const;
    std::vector<Vertex> y_vertices() const;
    const std::vector<Vertex>& basis_rows() const { return basis_rows_; }
    const std::vector<Vertex>& basis_cols() const { return basis_cols_; }

    const BitMatrix& c_inverse() const { return cinv_; }
    /// DX as an n x r matrix (columns in basis_rows() order).
    BitMatrix dx() const { return dxt_.transposed(); }
    const BitMatrix& dy() const { return dy_; }
    const BitMatrix& f() const { return f_; }

    RowProfile row_profile(Vertex i) const;
    const ColumnProfile& column_profile(Vertex j) const;

    /// Throws std::invalid_argument unless i in X and j in Y.
    SwapDelta evaluate_swap(Vertex i, Vertex j) const;
    /// Same as evaluate_swap(profile.vertex, j) with the row profile reused.
    SwapDelta evaluate_swap(const RowProfile& profile, Vertex j) const;
    /// evaluate_swap(i, j) for every j in Y, ascending j.
    std::vector<SwapDelta> evaluate_all_swaps(Vertex i) const;

    /// Applies a delta produced by evaluate_swap on this exact state. Throws
    /// std::invalid_argument if the delta is stale.
    void apply_swap(const SwapDelta& d);

    /// Recomputes every key matrix from its definition after each apply_swap
    /// and throws std::logic_error on any mismatch. Off by default.
    void set_self_check(bool on) { self_check_ = on; }

    /// Empty if every invariant holds, otherwise a description of the first
    /// violation found. O(n^3); meant for tests.
    std::string check_invariants() const;

   private:
    void build_from_scratch(std::span<const Vertex> x);
    void refresh_masks();
    void refresh_column_profiles();
    ColumnProfile compute_column_profile(Vertex j) const;
    Vertex pick(std::span<const Word> bits) const;

    void remove_basis_pair(Vertex a, Vertex b);
    void add_basis_pair(Vertex a, Vertex b);

    const Graph* graph_;
    std::size_t n_;
    WitnessOrder order_;
    bool self_check_ = false;
    std::uint64_t version_ = 0;

    std::vector<std::uint8_t> in_x_;
    std::vector<Word> mask_xf_;  // X \ X^B
    std::vector<Word> mask_yf_;  // Y \ Y^B

    std::vector<Vertex> basis_rows_;  // X^B; position = row/column index in the key matrices
    std::vector<Vertex> basis_cols_;  // Y^B
    std::vector<std::size_t> row_pos_;
    std::vector<std::size_t> col_pos_;

    BitMatrix cinv_;
    BitMatrix dxt_;
    BitMatrix dy_;
    BitMatrix f_;
    BitMatrix ft_;

    std::vector<ColumnProfile> column_profiles_;
};

}  // namespace cutrank
