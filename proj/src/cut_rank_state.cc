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

#include "cutrank/cut_rank_state.h"

#include <stdexcept>

#include "swap_tables.h"

namespace cutrank {

std::size_t naive_cut_rank(const Graph& g, std::span<const Vertex> x) {
    auto y = complement_of(g.num_vertices(), x);
    return rank(cut_matrix(g, x, y));
}

namespace {

// Row index of the common three-predicate table shape:
// (T,T) (T,F) (F,T) (F,F,q=1) (F,F,q=0).
std::size_t flag_row(bool a, bool b, bool q) {
    if (a) {
        return b ? 0 : 1;
    }
    if (b) {
        return 2;
    }
    return q ? 3 : 4;
}

}  // namespace

CutRankState::CutRankState(const Graph& g, std::span<const Vertex> x, WitnessOrder order)
    : graph_(&g), n_(g.num_vertices()), order_(order) {
    build_from_scratch(x);
}

void CutRankState::build_from_scratch(std::span<const Vertex> x) {
    in_x_.assign(n_, 0);
    for (Vertex v : x) {
        if (v >= n_) {
            throw std::invalid_argument("CutRankState: vertex out of range");
        }
        in_x_[v] = 1;
    }
    auto xs = x_vertices();
    auto ys = y_vertices();
    if (ys.empty()) {
        throw std::invalid_argument("CutRankState: Y = V \\ X must be nonempty");
    }

    // Row reduction of A[X, Y]. Pivot rows are never modified once chosen, so
    // A[pivot rows, pivot cols] is unitriangular-equivalent and thus invertible.
    BitMatrix w = cut_matrix(*graph_, xs, ys);
    std::vector<bool> is_pivot(xs.size(), false);
    basis_rows_.clear();
    basis_cols_.clear();
    for (std::size_t c = 0; c < ys.size(); c++) {
        std::size_t p = 0;
        while (p < xs.size() && (is_pivot[p] || !w.get(p, c))) {
            p++;
        }
        if (p == xs.size()) {
            continue;
        }
        is_pivot[p] = true;
        basis_rows_.push_back(xs[p]);
        basis_cols_.push_back(ys[c]);
        for (std::size_t k = 0; k < xs.size(); k++) {
            if (!is_pivot[k] && w.get(k, c)) {
                w.xor_row(k, w.row(p));
            }
        }
    }

    row_pos_.assign(n_, kNoBit);
    col_pos_.assign(n_, kNoBit);
    for (std::size_t p = 0; p < basis_rows_.size(); p++) {
        row_pos_[basis_rows_[p]] = p;
        col_pos_[basis_cols_[p]] = p;
    }

    std::vector<std::size_t> all(n_);
    for (std::size_t v = 0; v < n_; v++) {
        all[v] = v;
    }
    const BitMatrix& a = graph_->adjacency();
    auto cinv = invert(submatrix(a, basis_rows_, basis_cols_));
    if (!cinv) {
        throw std::logic_error("CutRankState: basis block is singular");
    }
    cinv_ = std::move(*cinv);
    BitMatrix a_v_yb = submatrix(a, all, basis_cols_);
    BitMatrix a_xb_v = submatrix(a, basis_rows_, all);
    BitMatrix dx = mul(a_v_yb, cinv_);
    dxt_ = dx.transposed();
    dy_ = mul(cinv_, a_xb_v);
    f_ = add(mul(dx, a_xb_v), a);
    ft_ = f_.transposed();

    refresh_masks();
    refresh_column_profiles();
}

std::vector<Vertex> CutRankState::x_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; v++) {
        if (in_x_[v]) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<Vertex> CutRankState::y_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; v++) {
        if (!in_x_[v]) {
            out.push_back(v);
        }
    }
    return out;
}

void CutRankState::refresh_masks() {
    mask_xf_.assign(words_for(n_), 0);
    mask_yf_.assign(words_for(n_), 0);
    for (Vertex v = 0; v < n_; v++) {
        if (in_x_[v] && row_pos_[v] == kNoBit) {
            set_bit(mask_xf_, v);
        } else if (!in_x_[v] && col_pos_[v] == kNoBit) {
            set_bit(mask_yf_, v);
        }
    }
}

Vertex CutRankState::pick(std::span<const Word> bits) const {
    return order_ == WitnessOrder::kSmallest ? find_first(bits) : find_last(bits);
}

RowProfile CutRankState::row_profile(Vertex i) const {
    if (i >= n_ || !in_x_[i]) {
        throw std::invalid_argument("row_profile: vertex is not in X");
    }
    RowProfile p;
    p.vertex = i;
    p.basis_pos = row_pos_[i];
    p.in_basis = p.basis_pos != kNoBit;
    const std::size_t nw = mask_xf_.size();
    std::vector<Word> scratch(nw);
    auto f_col = ft_.row(i);

    if (p.in_basis) {
        for (std::size_t q = 0; q < basis_cols_.size(); q++) {
            if (cinv_.get(q, p.basis_pos)) {
                Vertex cand = basis_cols_[q];
                if (p.alpha == kNoVertex || (order_ == WitnessOrder::kSmallest ? cand < p.alpha : cand > p.alpha)) {
                    p.alpha = cand;
                }
            }
        }
        auto dx_col = dxt_.row(p.basis_pos);
        for (std::size_t w = 0; w < nw; w++) {
            scratch[w] = dx_col[w] & mask_xf_[w];
        }
        p.k1 = pick(scratch);
        p.p1 = p.k1 != kNoVertex;

        for (std::size_t w = 0; w < nw; w++) {
            scratch[w] = f_col[w] & mask_xf_[w];
        }
        p.k3[0] = pick(scratch);
        for (std::size_t w = 0; w < nw; w++) {
            scratch[w] = (f_col[w] ^ dx_col[w]) & mask_xf_[w];
        }
        p.k3[1] = pick(scratch);
        p.p3 = {p.k3[0] != kNoVertex, p.k3[1] != kNoVertex};
    }

    if (p.p1) {
        // F[k2,i] + F[k1,i] DX[k2,i] = 1, k2 != k1.
        bool f_k1 = test_bit(f_col, p.k1);
        auto dx_col = dxt_.row(p.basis_pos);
        for (std::size_t w = 0; w < nw; w++) {
            scratch[w] = (f_col[w] ^ (f_k1 ? dx_col[w] : 0)) & mask_xf_[w];
        }
        clear_bit(scratch, p.k1);
    } else {
        for (std::size_t w = 0; w < nw; w++) {
            scratch[w] = f_col[w] & mask_xf_[w];
        }
        clear_bit(scratch, i);
    }
    p.k2 = pick(scratch);
    p.p2 = p.k2 != kNoVertex;
    return p;
}

ColumnProfile CutRankState::compute_column_profile(Vertex j) const {
    ColumnProfile p;
    p.vertex = j;
    p.basis_pos = col_pos_[j];
    p.in_basis = p.basis_pos != kNoBit;
    const std::size_t nw = mask_yf_.size();
    std::vector<Word> scratch(nw);
    auto f_row = f_.row(j);

    if (p.in_basis) {
        auto cinv_row = cinv_.row(p.basis_pos);
        for (std::size_t q = 0; q < basis_rows_.size(); q++) {
            if (test_bit(cinv_row, q)) {
                Vertex cand = basis_rows_[q];
                if (p.beta == kNoVertex || (order_ == WitnessOrder::kSmallest ? cand < p.beta : cand > p.beta)) {
                    p.beta = cand;
                }
            }
        }
        auto dy_row = dy_.row(p.basis_pos);
        for (std::size_t w = 0; w < nw; w++) {
            scratch[w] = dy_row[w] & mask_yf_[w];
        }
        p.l1 = pick(scratch);
        p.p1 = p.l1 != kNoVertex;

        for (std::size_t w = 0; w < nw; w++) {
            scratch[w] = f_row[w] & mask_yf_[w];
        }
        p.l3[0] = pick(scratch);
        for (std::size_t w = 0; w < nw; w++) {
            scratch[w] = (f_row[w] ^ dy_row[w]) & mask_yf_[w];
        }
        p.l3[1] = pick(scratch);
        p.p3 = {p.l3[0] != kNoVertex, p.l3[1] != kNoVertex};
    }

    if (p.p1) {
        // F[j,l2] + F[j,l1] DY[j,l2] = 1, l2 != l1.
        bool f_l1 = test_bit(f_row, p.l1);
        auto dy_row = dy_.row(p.basis_pos);
        for (std::size_t w = 0; w < nw; w++) {
            scratch[w] = (f_row[w] ^ (f_l1 ? dy_row[w] : 0)) & mask_yf_[w];
        }
        clear_bit(scratch, p.l1);
    } else {
        for (std::size_t w = 0; w < nw; w++) {
            scratch[w] = f_row[w] & mask_yf_[w];
        }
        clear_bit(scratch, j);
    }
    p.l2 = pick(scratch);
    p.p2 = p.l2 != kNoVertex;
    return p;
}

void CutRankState::refresh_column_profiles() {
    column_profiles_.assign(n_, ColumnProfile{});
    for (Vertex j = 0; j < n_; j++) {
        if (!in_x_[j]) {
            column_profiles_[j] = compute_column_profile(j);
        }
    }
}

const ColumnProfile& CutRankState::column_profile(Vertex j) const {
    if (j >= n_ || in_x_[j]) {
        throw std::invalid_argument("column_profile: vertex is not in Y");
    }
    return column_profiles_[j];
}

SwapDelta CutRankState::evaluate_swap(Vertex i, Vertex j) const { return evaluate_swap(row_profile(i), j); }

SwapDelta CutRankState::evaluate_swap(const RowProfile& pi, Vertex j) const {
    const Vertex i = pi.vertex;
    if (i >= n_ || !in_x_[i]) {
        throw std::invalid_argument("evaluate_swap: i is not in X");
    }
    if (j >= n_ || in_x_[j]) {
        throw std::invalid_argument("evaluate_swap: j is not in Y");
    }
    const ColumnProfile& pj = column_profiles_[j];

    const bool f_ji = f_.get(j, i);
    const bool dx_ji = pi.in_basis && dxt_.get(pi.basis_pos, j);
    const bool dy_ji = pj.in_basis && dy_.get(pj.basis_pos, i);
    const bool f_k1i = pi.p1 && f_.get(pi.k1, i);
    const bool f_jl1 = pj.p1 && f_.get(j, pj.l1);

    SwapCase table;
    std::size_t row;
    if (!pi.in_basis && !pj.in_basis) {
        table = SwapCase::kFreeFree;
        row = flag_row(pi.p2, pj.p2, f_ji);
    } else if (pi.in_basis && !pj.in_basis) {
        if (pi.p1) {
            table = SwapCase::kBasisFreeP1;
            row = flag_row(pi.p2, pj.p2, f_ji ^ (dx_ji && f_k1i));
        } else {
            table = SwapCase::kBasisFreeNoP1;
            row = dx_ji ? (pi.p2 ? 0 : 1) : 2 + flag_row(pi.p2, pj.p2, f_ji);
        }
    } else if (!pi.in_basis) {
        if (pj.p1) {
            table = SwapCase::kFreeBasisP1;
            row = flag_row(pj.p2, pi.p2, f_ji ^ (dy_ji && f_jl1));
        } else {
            table = SwapCase::kFreeBasisNoP1;
            row = dy_ji ? (pj.p2 ? 0 : 1) : 2 + flag_row(pj.p2, pi.p2, f_ji);
        }
    } else if (cinv_.get(pj.basis_pos, pi.basis_pos)) {
        if (pi.p1 && pj.p1) {
            table = SwapCase::kPairedBothP1;
            bool q = f_ji ^ (dx_ji && f_k1i) ^ (dy_ji && f_jl1) ^ (f_k1i && f_jl1);
            row = flag_row(pi.p2, pj.p2, q);
        } else {
            table = SwapCase::kPairedOther;
            row = flag_row(pi.p3[dy_ji], pj.p3[dx_ji], f_ji ^ (dx_ji && dy_ji));
        }
    } else if (pi.p1 && pj.p1) {
        table = SwapCase::kUnpairedBothP1;
        row = flag_row(pi.p2, pj.p2, f_ji ^ (dx_ji && f_k1i) ^ (dy_ji && f_jl1));
    } else if (pi.p1) {
        table = SwapCase::kUnpairedOnlyP1X;
        bool q = f_ji ^ (dx_ji && f_k1i);
        if (pj.p2) {
            row = dy_ji ? 0 : (pi.p2 ? 1 : 2);
        } else {
            row = dy_ji ? 3 : (pi.p2 ? 4 : (q ? 5 : 6));
        }
    } else if (pj.p1) {
        table = SwapCase::kUnpairedOnlyP1Y;
        bool q = f_ji ^ (dy_ji && f_jl1);
        if (pi.p2) {
            row = dx_ji ? 0 : (pj.p2 ? 1 : 2);
        } else {
            row = dx_ji ? 3 : (pj.p2 ? 4 : (q ? 5 : 6));
        }
    } else {
        table = SwapCase::kUnpairedNeitherP1;
        if (dx_ji && dy_ji) {
            row = 0;
        } else if (dx_ji) {
            row = pi.p2 ? 1 : 2;
        } else if (dy_ji) {
            row = pj.p2 ? 3 : 4;
        } else {
            row = 5 + flag_row(pi.p2, pj.p2, f_ji);
        }
    }

    auto resolve = [&](detail::Slot s) -> Vertex {
        switch (s) {
            case detail::Slot::kI: return i;
            case detail::Slot::kJ: return j;
            case detail::Slot::kK1: return pi.k1;
            case detail::Slot::kK2: return pi.k2;
            case detail::Slot::kK3: return pi.k3[dy_ji];
            case detail::Slot::kL1: return pj.l1;
            case detail::Slot::kL2: return pj.l2;
            case detail::Slot::kL3: return pj.l3[dx_ji];
            case detail::Slot::kAlpha: return pi.alpha;
            case detail::Slot::kBeta: return pj.beta;
        }
        return kNoVertex;
    };
    auto fill = [&](const detail::SlotList& from, VertexList& to) {
        for (std::size_t k = 0; k < from.size; k++) {
            to.push_back(resolve(from.slots[k]));
        }
    };

    const auto& t = detail::case_table(table);
    SwapDelta d;
    d.i = i;
    d.j = j;
    d.case_row = t.first_row + row;
    d.version = version_;
    const auto& tr = detail::table_row(d.case_row);
    d.delta = tr.delta;
    fill(t.removed_x, d.removed_from_xb);
    fill(t.removed_y, d.removed_from_yb);
    fill(tr.add_x, d.added_to_xb);
    fill(tr.add_y, d.added_to_yb);
    return d;
}

std::vector<SwapDelta> CutRankState::evaluate_all_swaps(Vertex i) const {
    RowProfile p = row_profile(i);
    std::vector<SwapDelta> out;
    for (Vertex j = 0; j < n_; j++) {
        if (!in_x_[j]) {
            out.push_back(evaluate_swap(p, j));
        }
    }
    return out;
}

// Drops row a from X^B and column b from Y^B; requires Cinv[b, a] = 1.
// With g = Cinv[b, :] and f = Cinv[:, a], the reduced inverse is
// Cinv + f g^T restricted to the remaining positions, and
//   DX' = DX + DX[:, a] g^T,  DY' = DY + f DY[b, :],  F' = F + DX[:, a] DY[b, :].
void CutRankState::remove_basis_pair(Vertex a, Vertex b) {
    const std::size_t pa = row_pos_[a];
    const std::size_t pb = col_pos_[b];
    if (pa == kNoBit || pb == kNoBit || !cinv_.get(pb, pa)) {
        throw std::logic_error("remove_basis_pair: pair is not removable");
    }
    const std::size_t r = basis_rows_.size();
    std::vector<Word> g(cinv_.row(pb).begin(), cinv_.row(pb).end());
    std::vector<bool> f(r);
    for (std::size_t q = 0; q < r; q++) {
        f[q] = cinv_.get(q, pa);
    }
    std::vector<Word> u(dxt_.row(pa).begin(), dxt_.row(pa).end());
    std::vector<Word> v(dy_.row(pb).begin(), dy_.row(pb).end());

    for (std::size_t w = 0; w < u.size(); w++) {
        for (Word bits = u[w]; bits; bits &= bits - 1) {
            f_.xor_row(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)), v);
        }
    }
    for (std::size_t w = 0; w < v.size(); w++) {
        for (Word bits = v[w]; bits; bits &= bits - 1) {
            ft_.xor_row(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)), u);
        }
    }
    for (std::size_t p = 0; p < r; p++) {
        if (p != pa && test_bit(g, p)) {
            dxt_.xor_row(p, u);
        }
    }
    for (std::size_t q = 0; q < r; q++) {
        if (q != pb && f[q]) {
            dy_.xor_row(q, v);
        }
    }

    // Compact: the last position moves into the freed slot on each side.
    const std::size_t last = r - 1;
    auto row_src = [&](std::size_t p) { return p == pa ? last : p; };
    auto col_src = [&](std::size_t q) { return q == pb ? last : q; };
    BitMatrix next(last, last);
    for (std::size_t q = 0; q < last; q++) {
        std::size_t sq = col_src(q);
        for (std::size_t p = 0; p < last; p++) {
            std::size_t sp = row_src(p);
            if (cinv_.get(sq, sp) ^ (f[sq] && test_bit(g, sp))) {
                next.set(q, p, true);
            }
        }
    }
    cinv_ = std::move(next);
    dxt_.swap_remove_row(pa);
    dy_.swap_remove_row(pb);

    row_pos_[a] = kNoBit;
    if (pa != last) {
        basis_rows_[pa] = basis_rows_[last];
        row_pos_[basis_rows_[pa]] = pa;
    }
    basis_rows_.pop_back();
    col_pos_[b] = kNoBit;
    if (pb != last) {
        basis_cols_[pb] = basis_cols_[last];
        col_pos_[basis_cols_[pb]] = pb;
    }
    basis_cols_.pop_back();
}

// Appends row a to X^B and column b to Y^B; requires F[a, b] = 1 (the Schur
// complement of the bordered block). With x = DX[a, :] and y = DY[:, b]:
//   Cinv'' = [[Cinv + y x^T, y], [x^T, 1]]
//   DX''   = [DX + F[:, b] x^T, F[:, b]]
//   DY''   = [[DY + y F[a, :]], [F[a, :]]]
//   F''    = F + F[:, b] F[a, :]
void CutRankState::add_basis_pair(Vertex a, Vertex b) {
    if (row_pos_[a] != kNoBit || col_pos_[b] != kNoBit || !f_.get(a, b)) {
        throw std::logic_error("add_basis_pair: pair does not extend the basis");
    }
    const std::size_t r = basis_rows_.size();
    std::vector<bool> x(r);
    std::vector<bool> y(r);
    for (std::size_t p = 0; p < r; p++) {
        x[p] = dxt_.get(p, a);
    }
    for (std::size_t q = 0; q < r; q++) {
        y[q] = dy_.get(q, b);
    }
    std::vector<Word> fa(f_.row(a).begin(), f_.row(a).end());
    std::vector<Word> fb(ft_.row(b).begin(), ft_.row(b).end());

    for (std::size_t w = 0; w < fb.size(); w++) {
        for (Word bits = fb[w]; bits; bits &= bits - 1) {
            f_.xor_row(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)), fa);
        }
    }
    for (std::size_t w = 0; w < fa.size(); w++) {
        for (Word bits = fa[w]; bits; bits &= bits - 1) {
            ft_.xor_row(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)), fb);
        }
    }
    for (std::size_t p = 0; p < r; p++) {
        if (x[p]) {
            dxt_.xor_row(p, fb);
        }
    }
    dxt_.push_row(fb);
    for (std::size_t q = 0; q < r; q++) {
        if (y[q]) {
            dy_.xor_row(q, fa);
        }
    }
    dy_.push_row(fa);

    BitMatrix next(r + 1, r + 1);
    for (std::size_t q = 0; q < r; q++) {
        for (std::size_t p = 0; p < r; p++) {
            if (cinv_.get(q, p) ^ (y[q] && x[p])) {
                next.set(q, p, true);
            }
        }
        next.set(q, r, y[q]);
    }
    for (std::size_t p = 0; p < r; p++) {
        next.set(r, p, x[p]);
    }
    next.set(r, r, true);
    cinv_ = std::move(next);

    row_pos_[a] = r;
    basis_rows_.push_back(a);
    col_pos_[b] = r;
    basis_cols_.push_back(b);
}

void CutRankState::apply_swap(const SwapDelta& d) {
    if (d.version != version_) {
        throw std::invalid_argument("apply_swap: delta was evaluated on a different state");
    }
    if (d.i >= n_ || d.j >= n_ || !in_x_[d.i] || in_x_[d.j]) {
        throw std::invalid_argument("apply_swap: delta does not match the partition");
    }
    const auto expected_rank = static_cast<std::size_t>(static_cast<long>(rank()) + d.delta);

    // Reduction.
    for (std::size_t t = 0; t < d.removed_from_xb.size(); t++) {
        remove_basis_pair(d.removed_from_xb[t], d.removed_from_yb[t]);
    }

    // Swap sides. The key matrices depend only on the basis sets.
    in_x_[d.i] = 0;
    in_x_[d.j] = 1;

    // Extension. Any nonzero entry of the Schur complement block
    // F[added_x, added_y] is a valid next pivot, so pair greedily.
    std::array<bool, 4> used_x{};
    std::array<bool, 4> used_y{};
    for (std::size_t step = 0; step < d.added_to_xb.size(); step++) {
        bool found = false;
        for (std::size_t s = 0; s < d.added_to_xb.size() && !found; s++) {
            if (used_x[s]) {
                continue;
            }
            for (std::size_t t = 0; t < d.added_to_yb.size() && !found; t++) {
                if (!used_y[t] && f_.get(d.added_to_xb[s], d.added_to_yb[t])) {
                    Vertex a = d.added_to_xb[s];
                    Vertex b = d.added_to_yb[t];
                    if (!in_x_[a] || in_x_[b]) {
                        throw std::logic_error("apply_swap: basis extension crosses the partition");
                    }
                    add_basis_pair(a, b);
                    used_x[s] = used_y[t] = true;
                    found = true;
                }
            }
        }
        if (!found) {
            throw std::logic_error("apply_swap: extension block is singular for " + case_row_label(d.case_row));
        }
    }
    if (rank() != expected_rank) {
        throw std::logic_error("apply_swap: rank bookkeeping mismatch");
    }

    refresh_masks();
    refresh_column_profiles();
    version_++;

    if (self_check_) {
        if (auto err = check_invariants(); !err.empty()) {
            throw std::logic_error("apply_swap self-check after " + case_row_label(d.case_row) + ": " + err);
        }
    }
}

std::string CutRankState::check_invariants() const {
    const BitMatrix& a = graph_->adjacency();
    const std::size_t r = basis_rows_.size();
    if (basis_cols_.size() != r) {
        return "basis sets differ in size";
    }
    for (Vertex v : basis_rows_) {
        if (!in_x_[v]) {
            return "X^B contains a vertex outside X";
        }
    }
    for (Vertex v : basis_cols_) {
        if (in_x_[v]) {
            return "Y^B contains a vertex outside Y";
        }
    }
    auto xs = x_vertices();
    if (naive_cut_rank(*graph_, xs) != r) {
        return "rank differs from naive recomputation";
    }
    BitMatrix c = submatrix(a, basis_rows_, basis_cols_);
    if (mul(c, cinv_) != BitMatrix::identity(r)) {
        return "Cinv is not the inverse of A[X^B, Y^B]";
    }

    std::vector<std::size_t> xf;
    std::vector<std::size_t> yf;
    for (Vertex v = 0; v < n_; v++) {
        if (in_x_[v] && row_pos_[v] == kNoBit) {
            xf.push_back(v);
        }
        if (!in_x_[v] && col_pos_[v] == kNoBit) {
            yf.push_back(v);
        }
    }
    BitMatrix lhs = mul(mul(submatrix(a, xf, basis_cols_), cinv_), submatrix(a, basis_rows_, yf));
    if (lhs != submatrix(a, xf, yf)) {
        return "basis does not generate A[X^F, Y^F]";
    }

    std::vector<std::size_t> all(n_);
    for (std::size_t v = 0; v < n_; v++) {
        all[v] = v;
    }
    BitMatrix dx = mul(submatrix(a, all, basis_cols_), cinv_);
    BitMatrix a_xb_v = submatrix(a, basis_rows_, all);
    if (dx.transposed() != dxt_) {
        return "DX differs from A[V, Y^B] Cinv";
    }
    if (mul(cinv_, a_xb_v) != dy_) {
        return "DY differs from Cinv A[X^B, V]";
    }
    BitMatrix f = add(mul(dx, a_xb_v), a);
    if (f != f_ || f.transposed() != ft_) {
        return "F differs from A[V, Y^B] Cinv A[X^B, V] + A";
    }
    for (Vertex j = 0; j < n_; j++) {
        if (!in_x_[j] && !(column_profiles_[j] == compute_column_profile(j))) {
            return "cached column profile is stale";
        }
    }
    return {};
}

}  // namespace cutrank
