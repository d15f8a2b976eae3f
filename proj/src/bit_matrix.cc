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

#include "cutrank/bit_matrix.h"

#include <algorithm>
#include <stdexcept>

namespace cutrank {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), words_(rows * words_for(cols), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t k = 0; k < n; k++) {
        m.set(k, k, true);
    }
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    BitMatrix m(rows.size(), cols);
    std::size_t r = 0;
    for (std::string_view s : rows) {
        if (s.size() != cols) {
            throw std::invalid_argument("BitMatrix::from_strings: ragged rows");
        }
        for (std::size_t c = 0; c < cols; c++) {
            if (s[c] == '1') {
                m.set(r, c, true);
            } else if (s[c] != '0') {
                throw std::invalid_argument("BitMatrix::from_strings: expected '0' or '1'");
            }
        }
        r++;
    }
    return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
    if (value) {
        set_bit(row(r), c);
    } else {
        clear_bit(row(r), c);
    }
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

void BitMatrix::push_row(std::span<const Word> src) {
    if (src.size() != stride_) {
        throw std::invalid_argument("BitMatrix::push_row: width mismatch");
    }
    words_.insert(words_.end(), src.begin(), src.end());
    rows_++;
}

void BitMatrix::swap_remove_row(std::size_t r) {
    swap_rows(r, rows_ - 1);
    rows_--;
    words_.resize(rows_ * stride_);
}

bool BitMatrix::is_zero() const { return !any_bit(words_); }

std::size_t BitMatrix::count_ones() const {
    std::size_t total = 0;
    for (Word w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        auto src = row(r);
        for (std::size_t wi = 0; wi < stride_; wi++) {
            Word bits = src[wi];
            while (bits) {
                t.set(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)), r, true);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

std::string BitMatrix::str() const {
    std::string out;
    out.reserve(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out.push_back(get(r, c) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

std::size_t rank(const BitMatrix& m) {
    BitMatrix w = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < w.cols() && r < w.rows(); c++) {
        std::size_t pivot = r;
        while (pivot < w.rows() && !w.get(pivot, c)) {
            pivot++;
        }
        if (pivot == w.rows()) {
            continue;
        }
        w.swap_rows(r, pivot);
        auto prow = w.row(r);
        for (std::size_t k = r + 1; k < w.rows(); k++) {
            if (w.get(k, c)) {
                w.xor_row(k, prow);
            }
        }
        r++;
    }
    return r;
}

std::optional<BitMatrix> invert(const BitMatrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("invert: matrix is not square");
    }
    std::size_t n = m.rows();
    BitMatrix w = m;
    BitMatrix inv = BitMatrix::identity(n);
    for (std::size_t c = 0; c < n; c++) {
        std::size_t pivot = c;
        while (pivot < n && !w.get(pivot, c)) {
            pivot++;
        }
        if (pivot == n) {
            return std::nullopt;
        }
        w.swap_rows(c, pivot);
        inv.swap_rows(c, pivot);
        for (std::size_t k = 0; k < n; k++) {
            if (k != c && w.get(k, c)) {
                w.xor_row(k, w.row(c));
                inv.xor_row(k, inv.row(c));
            }
        }
    }
    return inv;
}

BitMatrix mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("mul: dimension mismatch");
    }
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); r++) {
        auto arow = a.row(r);
        auto orow = out.row(r);
        for (std::size_t wi = 0; wi < arow.size(); wi++) {
            Word bits = arow[wi];
            while (bits) {
                std::size_t k = wi * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                xor_into(orow, b.row(k));
            }
        }
    }
    return out;
}

BitMatrix add(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("add: dimension mismatch");
    }
    BitMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); r++) {
        out.xor_row(r, b.row(r));
    }
    return out;
}

namespace {

void check_indices(std::span<const std::size_t> idx, std::size_t bound, const char* what) {
    std::vector<bool> seen(bound, false);
    for (std::size_t k : idx) {
        if (k >= bound) {
            throw std::invalid_argument(std::string("submatrix: ") + what + " index out of range");
        }
        if (seen[k]) {
            throw std::invalid_argument(std::string("submatrix: duplicate ") + what + " index");
        }
        seen[k] = true;
    }
}

}  // namespace

BitMatrix submatrix(const BitMatrix& m, std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) {
    check_indices(row_idx, m.rows(), "row");
    check_indices(col_idx, m.cols(), "column");
    BitMatrix out(row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); r++) {
        auto src = m.row(row_idx[r]);
        auto dst = out.row(r);
        for (std::size_t c = 0; c < col_idx.size(); c++) {
            if (test_bit(src, col_idx[c])) {
                set_bit(dst, c);
            }
        }
    }
    return out;
}

std::vector<RankOneTerm> rank_one_decompose(const BitMatrix& m) {
    BitMatrix w = m;
    std::vector<RankOneTerm> terms;
    for (std::size_t p = 0; p < w.rows(); p++) {
        std::size_t c = find_first(w.row(p));
        if (c == kNoBit) {
            continue;
        }
        RankOneTerm term;
        std::vector<Word> pivot_row(w.row(p).begin(), w.row(p).end());
        for (std::size_t r = 0; r < w.rows(); r++) {
            if (w.get(r, c)) {
                term.rows.push_back(r);
            }
        }
        for (std::size_t k = 0; k < w.cols(); k++) {
            if (test_bit(pivot_row, k)) {
                term.cols.push_back(k);
            }
        }
        // Rows above p are already zero, so only rows >= p can carry the pivot column.
        for (std::size_t r : term.rows) {
            w.xor_row(r, pivot_row);
        }
        terms.push_back(std::move(term));
    }
    return terms;
}

BitMatrix sum_of_terms(std::span<const RankOneTerm> terms, std::size_t rows, std::size_t cols) {
    BitMatrix out(rows, cols);
    for (const auto& t : terms) {
        for (std::size_t r : t.rows) {
            for (std::size_t c : t.cols) {
                out.flip(r, c);
            }
        }
    }
    return out;
}

}  // namespace cutrank
