// Copyright 2026 The Hypergram Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypergram/gf2.hpp"

#include <stdexcept>

namespace hypergram {

BitVector::BitVector(size_t length) : length_(length), words_((length + 63) / 64, 0) {
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string must contain only 0 and 1");
        }
    }
    return v;
}

bool BitVector::get(size_t i) const {
    if (i >= length_) {
        throw std::out_of_range("bit index out of range");
    }
    return (words_[i / 64] >> (i % 64)) & 1;
}

void BitVector::set(size_t i, bool value) {
    if (i >= length_) {
        throw std::out_of_range("bit index out of range");
    }
    uint64_t mask = uint64_t{1} << (i % 64);
    if (value) {
        words_[i / 64] |= mask;
    } else {
        words_[i / 64] &= ~mask;
    }
}

void BitVector::flip(size_t i) {
    if (i >= length_) {
        throw std::out_of_range("bit index out of range");
    }
    words_[i / 64] ^= uint64_t{1} << (i % 64);
}

bool BitVector::is_zero() const {
    for (uint64_t w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

size_t BitVector::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += (size_t)std::popcount(w);
    }
    return total;
}

bool BitVector::dot(const BitVector &other) const {
    if (length_ != other.length_) {
        throw std::invalid_argument("dot of vectors of different lengths");
    }
    uint64_t acc = 0;
    for (size_t i = 0; i < words_.size(); i++) {
        acc ^= words_[i] & other.words_[i];
    }
    return std::popcount(acc) & 1;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (length_ != other.length_) {
        throw std::invalid_argument("xor of vectors of different lengths");
    }
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

std::string BitVector::str() const {
    std::string s(length_, '0');
    for (size_t i = 0; i < length_; i++) {
        if ((words_[i / 64] >> (i % 64)) & 1) {
            s[i] = '1';
        }
    }
    return s;
}

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.data_[i].set(i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string> &rows) {
    BitMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != m.cols_) {
            throw std::invalid_argument("rows of unequal length");
        }
        m.data_[r] = BitVector::from_string(rows[r]);
    }
    return m;
}

bool BitMatrix::get(size_t r, size_t c) const {
    return row(r).get(c);
}

void BitMatrix::set(size_t r, size_t c, bool value) {
    row(r).set(c, value);
}

BitVector &BitMatrix::row(size_t r) {
    if (r >= rows_) {
        throw std::out_of_range("row index out of range");
    }
    return data_[r];
}

const BitVector &BitMatrix::row(size_t r) const {
    if (r >= rows_) {
        throw std::out_of_range("row index out of range");
    }
    return data_[r];
}

BitVector BitMatrix::column(size_t c) const {
    if (c >= cols_) {
        throw std::out_of_range("column index out of range");
    }
    BitVector v(rows_);
    for (size_t r = 0; r < rows_; r++) {
        if (data_[r].get(c)) {
            v.set(r, true);
        }
    }
    return v;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for_each_set_bit(data_[r], [&](size_t c) { t.data_[c].set(r, true); });
    }
    return t;
}

bool BitMatrix::is_zero() const {
    for (const auto &r : data_) {
        if (!r.is_zero()) {
            return false;
        }
    }
    return true;
}

bool BitMatrix::is_symmetric() const {
    if (rows_ != cols_) {
        return false;
    }
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = r + 1; c < cols_; c++) {
            if (data_[r].get(c) != data_[c].get(r)) {
                return false;
            }
        }
    }
    return true;
}

bool BitMatrix::has_zero_diagonal() const {
    size_t n = rows_ < cols_ ? rows_ : cols_;
    for (size_t i = 0; i < n; i++) {
        if (data_[i].get(i)) {
            return false;
        }
    }
    return true;
}

std::string BitMatrix::str() const {
    std::string s;
    for (size_t r = 0; r < rows_; r++) {
        s += data_[r].str();
        s += '\n';
    }
    return s;
}

BitMatrix mat_mul(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("inner dimensions do not match");
    }
    BitMatrix out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        BitVector &acc = out.row(i);
        for_each_set_bit(a.row(i), [&](size_t k) { acc ^= b.row(k); });
    }
    return out;
}

BitVector mat_vec(const BitMatrix &a, const BitVector &x) {
    if (a.cols() != x.size()) {
        throw std::invalid_argument("inner dimensions do not match");
    }
    BitVector y(a.rows());
    for (size_t i = 0; i < a.rows(); i++) {
        if (a.row(i).dot(x)) {
            y.set(i, true);
        }
    }
    return y;
}

namespace {

// Forward elimination on a copy; pivots chosen at the lowest row and column
// indices available so every caller is deterministic. Returns the pivot
// columns in order.
std::vector<size_t> echelonize(BitMatrix &m, bool reduce_up) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); c++) {
        size_t p = r;
        while (p < m.rows() && !m.get(p, c)) {
            p++;
        }
        if (p == m.rows()) {
            continue;
        }
        if (p != r) {
            std::swap(m.row(p), m.row(r));
        }
        for (size_t q = reduce_up ? 0 : r + 1; q < m.rows(); q++) {
            if (q != r && m.get(q, c)) {
                m.row(q) ^= m.row(r);
            }
        }
        pivots.push_back(c);
        r++;
    }
    return pivots;
}

}  // namespace

size_t rank(const BitMatrix &m) {
    BitMatrix work = m;
    return echelonize(work, false).size();
}

std::vector<size_t> column_basis(const BitMatrix &m) {
    BitMatrix work = m;
    // Pivot columns of the echelon form are exactly the greedy
    // lowest-index maximal independent column set.
    return echelonize(work, false);
}

std::vector<BitVector> kernel_basis(const BitMatrix &m) {
    BitMatrix work = m;
    std::vector<size_t> pivots = echelonize(work, true);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<BitVector> basis;
    for (size_t c = 0; c < m.cols(); c++) {
        if (is_pivot[c]) {
            continue;
        }
        BitVector v(m.cols());
        v.set(c, true);
        for (size_t r = 0; r < pivots.size(); r++) {
            if (work.get(r, c)) {
                v.set(pivots[r], true);
            }
        }
        basis.push_back(v);
    }
    return basis;
}

std::optional<BitVector> solve_in_span(std::span<const BitVector> basis, const BitVector &target) {
    size_t k = basis.size();
    if (k == 0) {
        if (target.is_zero()) {
            return BitVector(0);
        }
        return std::nullopt;
    }
    size_t len = basis[0].size();
    for (const BitVector &b : basis) {
        if (b.size() != len) {
            throw std::invalid_argument("basis vectors of unequal length");
        }
    }
    if (target.size() != len) {
        throw std::invalid_argument("target length does not match basis");
    }
    // Augmented system [B | t] with the basis vectors as columns.
    BitMatrix aug(len, k + 1);
    for (size_t j = 0; j < k; j++) {
        for_each_set_bit(basis[j], [&](size_t i) { aug.set(i, j, true); });
    }
    for_each_set_bit(target, [&](size_t i) { aug.set(i, k, true); });
    std::vector<size_t> pivots = echelonize(aug, true);
    BitVector coeffs(k);
    for (size_t r = 0; r < pivots.size(); r++) {
        if (pivots[r] == k) {
            return std::nullopt;  // pivot in the augmented column
        }
        if (aug.get(r, k)) {
            coeffs.set(pivots[r], true);
        }
    }
    return coeffs;
}

}  // namespace hypergram
