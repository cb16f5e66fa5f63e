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

#include "colorproj/gf2.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace colorproj {

namespace {

void require_same_dimension(size_t a, size_t b, const char *what) {
    if (a != b) {
        std::ostringstream ss;
        ss << what << ": dimension mismatch (" << a << " vs " << b << ")";
        throw std::invalid_argument(ss.str());
    }
}

void check_support(size_t dimension, const std::vector<uint32_t> &support) {
    for (size_t i = 0; i < support.size(); i++) {
        if (support[i] >= dimension) {
            throw std::invalid_argument("chain index out of range");
        }
        if (i > 0 && support[i - 1] >= support[i]) {
            throw std::invalid_argument("chain support must be strictly increasing");
        }
    }
}

}  // namespace

BinaryChain::BinaryChain(size_t dimension) : dimension_(dimension) {
}

BinaryChain::BinaryChain(size_t dimension, std::vector<uint32_t> support)
    : dimension_(dimension), support_(std::move(support)) {
    check_support(dimension_, support_);
}

BinaryChain BinaryChain::from_toggles(size_t dimension, std::span<const uint32_t> indices) {
    std::vector<uint32_t> sorted(indices.begin(), indices.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<uint32_t> support;
    support.reserve(sorted.size());
    for (size_t i = 0; i < sorted.size();) {
        size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) {
            j++;
        }
        if ((j - i) & 1) {
            support.push_back(sorted[i]);
        }
        i = j;
    }
    return BinaryChain(dimension, std::move(support));
}

BinaryChain BinaryChain::from_indicator(std::span<const uint8_t> bits) {
    BinaryChain result(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] & 1) {
            result.support_.push_back(static_cast<uint32_t>(i));
        }
    }
    return result;
}

BinaryChain BinaryChain::full(size_t dimension) {
    BinaryChain result(dimension);
    result.support_.resize(dimension);
    for (size_t i = 0; i < dimension; i++) {
        result.support_[i] = static_cast<uint32_t>(i);
    }
    return result;
}

bool BinaryChain::contains(uint32_t index) const {
    return std::binary_search(support_.begin(), support_.end(), index);
}

std::vector<uint8_t> BinaryChain::to_indicator() const {
    std::vector<uint8_t> bits(dimension_, 0);
    for (uint32_t i : support_) {
        bits[i] = 1;
    }
    return bits;
}

std::string BinaryChain::str() const {
    std::ostringstream ss;
    ss << "{";
    for (size_t i = 0; i < support_.size(); i++) {
        if (i) {
            ss << ",";
        }
        ss << support_[i];
    }
    ss << "}";
    return ss.str();
}

BinaryChain &BinaryChain::operator+=(const BinaryChain &other) {
    require_same_dimension(dimension_, other.dimension_, "chain addition");
    std::vector<uint32_t> out;
    out.reserve(support_.size() + other.support_.size());
    std::set_symmetric_difference(
        support_.begin(), support_.end(), other.support_.begin(), other.support_.end(), std::back_inserter(out));
    support_ = std::move(out);
    return *this;
}

BinaryChain add(const BinaryChain &a, const BinaryChain &b) {
    return a + b;
}

bool dot(const BinaryChain &a, const BinaryChain &b) {
    require_same_dimension(a.dimension(), b.dimension(), "dot");
    auto i = a.support().begin();
    auto j = b.support().begin();
    bool parity = false;
    while (i != a.support().end() && j != b.support().end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            parity = !parity;
            ++i;
            ++j;
        }
    }
    return parity;
}

BinaryMatrix::BinaryMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), row_supports_(rows) {
}

BinaryMatrix::BinaryMatrix(size_t rows, size_t cols, std::vector<std::vector<uint32_t>> row_supports)
    : rows_(rows), cols_(cols), row_supports_(std::move(row_supports)) {
    if (row_supports_.size() != rows_) {
        throw std::invalid_argument("row count does not match row_supports");
    }
    for (auto &r : row_supports_) {
        std::sort(r.begin(), r.end());
        check_support(cols_, r);
    }
}

BinaryChain BinaryMatrix::row_chain(size_t i) const {
    return BinaryChain(cols_, row_supports_.at(i));
}

BinaryMatrix BinaryMatrix::transpose() const {
    std::vector<std::vector<uint32_t>> t(cols_);
    for (size_t i = 0; i < rows_; i++) {
        for (uint32_t j : row_supports_[i]) {
            t[j].push_back(static_cast<uint32_t>(i));
        }
    }
    return BinaryMatrix(cols_, rows_, std::move(t));
}

BinaryChain BinaryMatrix::multiply(const BinaryChain &v) const {
    require_same_dimension(v.dimension(), cols_, "matrix-vector product");
    std::vector<uint8_t> bits = v.to_indicator();
    std::vector<uint32_t> out;
    for (size_t i = 0; i < rows_; i++) {
        uint8_t parity = 0;
        for (uint32_t j : row_supports_[i]) {
            parity ^= bits[j];
        }
        if (parity) {
            out.push_back(static_cast<uint32_t>(i));
        }
    }
    return BinaryChain(rows_, std::move(out));
}

BinaryChain BinaryMatrix::combine_rows(const BinaryChain &v) const {
    require_same_dimension(v.dimension(), rows_, "row combination");
    std::vector<uint8_t> acc(cols_, 0);
    for (uint32_t i : v.support()) {
        for (uint32_t j : row_supports_[i]) {
            acc[j] ^= 1;
        }
    }
    return BinaryChain::from_indicator(acc);
}

RowEchelon::RowEchelon(const BinaryMatrix &m) : cols_(m.cols()), words_((m.cols() + 63) / 64) {
    size_t n = m.rows();
    std::vector<uint64_t> work(n * words_, 0);
    for (size_t i = 0; i < n; i++) {
        for (uint32_t j : m.row(i)) {
            work[i * words_ + j / 64] |= uint64_t{1} << (j % 64);
        }
    }
    auto row_ptr = [&](size_t i) { return work.data() + i * words_; };

    size_t next = 0;
    for (size_t col = 0; col < cols_ && next < n; col++) {
        size_t w = col / 64;
        uint64_t bit = uint64_t{1} << (col % 64);
        size_t found = n;
        for (size_t i = next; i < n; i++) {
            if (row_ptr(i)[w] & bit) {
                found = i;
                break;
            }
        }
        if (found == n) {
            continue;
        }
        if (found != next) {
            std::swap_ranges(row_ptr(found), row_ptr(found) + words_, row_ptr(next));
        }
        uint64_t *pivot = row_ptr(next);
        for (size_t i = 0; i < n; i++) {
            if (i != next && (row_ptr(i)[w] & bit)) {
                uint64_t *r = row_ptr(i);
                for (size_t k = w; k < words_; k++) {
                    r[k] ^= pivot[k];
                }
            }
        }
        pivots_.push_back(static_cast<uint32_t>(col));
        next++;
    }
    rows_.assign(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(next * words_));
}

bool RowEchelon::contains_packed(std::span<const uint64_t> words) const {
    if (words.size() != words_) {
        throw std::invalid_argument("packed vector has wrong word count");
    }
    std::vector<uint64_t> v(words.begin(), words.end());
    for (size_t i = 0; i < pivots_.size(); i++) {
        uint32_t col = pivots_[i];
        if (v[col / 64] >> (col % 64) & 1) {
            const uint64_t *r = rows_.data() + i * words_;
            for (size_t k = col / 64; k < words_; k++) {
                v[k] ^= r[k];
            }
        }
    }
    return std::all_of(v.begin(), v.end(), [](uint64_t x) { return x == 0; });
}

bool RowEchelon::contains(const BinaryChain &v) const {
    require_same_dimension(v.dimension(), cols_, "row-space membership");
    std::vector<uint64_t> words(words_, 0);
    for (uint32_t j : v.support()) {
        words[j / 64] |= uint64_t{1} << (j % 64);
    }
    return contains_packed(words);
}

size_t rank(const BinaryMatrix &m) {
    return RowEchelon(m).rank();
}

bool in_row_space(const BinaryMatrix &m, const BinaryChain &v) {
    return RowEchelon(m).contains(v);
}

}  // namespace colorproj
