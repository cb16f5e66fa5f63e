// Copyright 2026 colorproj Contributors
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

#ifndef COLORPROJ_GF2_H
#define COLORPROJ_GF2_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace colorproj {

/// A vector over GF(2), stored as the sorted support of its indicator.
///
/// Every chain knows the dimension of the space it lives in. Operations that
/// combine chains of different dimensions throw std::invalid_argument, since
/// several chain spaces (hypergraph, tiling, subtilings) coexist in a decoder.
class BinaryChain {
   public:
    BinaryChain() = default;
    explicit BinaryChain(size_t dimension);

    /// Support must be strictly increasing and below `dimension`.
    BinaryChain(size_t dimension, std::vector<uint32_t> support);

    /// Builds the sum of the given basis vectors; repeated indices cancel.
    static BinaryChain from_toggles(size_t dimension, std::span<const uint32_t> indices);
    static BinaryChain from_indicator(std::span<const uint8_t> bits);
    static BinaryChain full(size_t dimension);

    size_t dimension() const { return dimension_; }
    const std::vector<uint32_t> &support() const { return support_; }
    size_t weight() const { return support_.size(); }
    bool is_zero() const { return support_.empty(); }
    bool contains(uint32_t index) const;

    std::vector<uint8_t> to_indicator() const;
    std::string str() const;

    BinaryChain &operator+=(const BinaryChain &other);
    friend BinaryChain operator+(BinaryChain a, const BinaryChain &b) {
        a += b;
        return a;
    }
    bool operator==(const BinaryChain &other) const = default;

   private:
    size_t dimension_ = 0;
    std::vector<uint32_t> support_;
};

/// Symmetric difference of supports. Throws on dimension mismatch.
BinaryChain add(const BinaryChain &a, const BinaryChain &b);

/// GF(2) inner product of two chains of equal dimension.
bool dot(const BinaryChain &a, const BinaryChain &b);

/// Sparse binary matrix stored as per-row sorted column supports.
class BinaryMatrix {
   public:
    BinaryMatrix() = default;
    BinaryMatrix(size_t rows, size_t cols);
    BinaryMatrix(size_t rows, size_t cols, std::vector<std::vector<uint32_t>> row_supports);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    std::span<const uint32_t> row(size_t i) const { return row_supports_[i]; }
    const std::vector<std::vector<uint32_t>> &row_supports() const { return row_supports_; }
    BinaryChain row_chain(size_t i) const;

    BinaryMatrix transpose() const;

    /// M v, for v of dimension cols(); result has dimension rows().
    BinaryChain multiply(const BinaryChain &v) const;

    /// vᵀ M, the sum of the rows selected by v (dimension rows()); result has
    /// dimension cols().
    BinaryChain combine_rows(const BinaryChain &v) const;

    bool operator==(const BinaryMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<std::vector<uint32_t>> row_supports_;
};

/// Reduced row echelon form of a binary matrix, bit-packed.
///
/// Built once and reused: each membership query costs O(rank * cols / 64).
class RowEchelon {
   public:
    RowEchelon() = default;
    explicit RowEchelon(const BinaryMatrix &m);

    size_t rank() const { return pivots_.size(); }
    size_t cols() const { return cols_; }
    const std::vector<uint32_t> &pivot_columns() const { return pivots_; }

    /// True iff v is a GF(2) combination of the rows of the source matrix.
    bool contains(const BinaryChain &v) const;
    bool contains_packed(std::span<const uint64_t> words) const;

   private:
    size_t cols_ = 0;
    size_t words_ = 0;
    std::vector<uint32_t> pivots_;
    std::vector<uint64_t> rows_;  // rank() rows of words_ words, in pivot order
};

/// GF(2) row rank.
size_t rank(const BinaryMatrix &m);

/// One-shot row-space membership. Use RowEchelon directly for repeated queries.
bool in_row_space(const BinaryMatrix &m, const BinaryChain &v);

}  // namespace colorproj

#endif
