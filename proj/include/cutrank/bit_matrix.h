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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cutrank {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;
inline constexpr std::size_t kNoBit = static_cast<std::size_t>(-1);

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

inline bool test_bit(std::span<const Word> w, std::size_t k) { return (w[k / kWordBits] >> (k % kWordBits)) & 1U; }
inline void set_bit(std::span<Word> w, std::size_t k) { w[k / kWordBits] |= Word{1} << (k % kWordBits); }
inline void clear_bit(std::span<Word> w, std::size_t k) { w[k / kWordBits] &= ~(Word{1} << (k % kWordBits)); }

inline std::size_t find_first(std::span<const Word> w) {
    for (std::size_t k = 0; k < w.size(); k++) {
        if (w[k]) {
            return k * kWordBits + static_cast<std::size_t>(std::countr_zero(w[k]));
        }
    }
    return kNoBit;
}

inline std::size_t find_last(std::span<const Word> w) {
    for (std::size_t k = w.size(); k-- > 0;) {
        if (w[k]) {
            return k * kWordBits + kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(w[k]));
        }
    }
    return kNoBit;
}

inline bool any_bit(std::span<const Word> w) {
    for (Word x : w) {
        if (x) {
            return true;
        }
    }
    return false;
}

inline void xor_into(std::span<Word> dst, std::span<const Word> src) {
    for (std::size_t k = 0; k < dst.size(); k++) {
        dst[k] ^= src[k];
    }
}

/// Dense matrix over GF(2). Rows are stored contiguously as 64-bit words;
/// padding bits past `cols()` in the last word of each row are kept zero.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    /// Builds a matrix from strings of '0'/'1', one per row. Handy in tests.
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const { return test_bit(row(r), c); }
    void set(std::size_t r, std::size_t c, bool value);
    void flip(std::size_t r, std::size_t c) { row(r)[c / kWordBits] ^= Word{1} << (c % kWordBits); }

    std::span<Word> row(std::size_t r) { return {words_.data() + r * stride_, stride_}; }
    std::span<const Word> row(std::size_t r) const { return {words_.data() + r * stride_, stride_}; }

    /// row(dst) ^= src; src must have words_per_row() words.
    void xor_row(std::size_t dst, std::span<const Word> src) { xor_into(row(dst), src); }
    void swap_rows(std::size_t a, std::size_t b);
    void push_row(std::span<const Word> src);
    /// Removes row r by moving the last row into its slot.
    void swap_remove_row(std::size_t r);

    bool is_zero() const;
    std::size_t count_ones() const;
    BitMatrix transposed() const;
    std::string str() const;

    bool operator==(const BitMatrix& other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> words_;
};

/// Rank via Gauss-Jordan elimination on a copy.
std::size_t rank(const BitMatrix& m);

/// Inverse over GF(2), or nullopt when m is singular. Throws std::invalid_argument
/// when m is not square.
std::optional<BitMatrix> invert(const BitMatrix& m);

/// Product over GF(2). Throws std::invalid_argument on a dimension mismatch.
BitMatrix mul(const BitMatrix& a, const BitMatrix& b);

BitMatrix add(const BitMatrix& a, const BitMatrix& b);

/// Rows and columns are taken in the order given. Indices must be in range and
/// distinct within each list; violations throw std::invalid_argument.
BitMatrix submatrix(const BitMatrix& m, std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx);

/// One term u * v^T of a rank-one decomposition, stored as the supports of u
/// (row indices) and v (column indices).
struct RankOneTerm {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;

    bool operator==(const RankOneTerm& other) const = default;
};

/// Decomposes m into exactly rank(m) outer products. At each step the first
/// nonzero row of the working matrix is the pivot row and its first set column
/// the pivot column; the term is (pivot column, pivot row) and it is XORed out.
std::vector<RankOneTerm> rank_one_decompose(const BitMatrix& m);

/// Sum of outer products over GF(2), as an rows x cols matrix.
BitMatrix sum_of_terms(std::span<const RankOneTerm> terms, std::size_t rows, std::size_t cols);

}  // namespace cutrank
