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

#ifndef HYPERGRAM_GF2_HPP
#define HYPERGRAM_GF2_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypergram {

// Vector over GF(2), packed 64 bits per word (bit i lives in word i/64 at
// position i%64). Bits past the length are kept zero.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(size_t length);
    static BitVector from_string(std::string_view bits);

    size_t size() const {
        return length_;
    }
    bool get(size_t i) const;
    void set(size_t i, bool value);
    void flip(size_t i);
    bool is_zero() const;
    size_t popcount() const;
    // Parity of the bitwise AND with `other`.
    bool dot(const BitVector &other) const;

    BitVector &operator^=(const BitVector &other);
    friend BitVector operator^(BitVector lhs, const BitVector &rhs) {
        lhs ^= rhs;
        return lhs;
    }
    bool operator==(const BitVector &) const = default;

    std::string str() const;
    const std::vector<uint64_t> &words() const {
        return words_;
    }

  private:
    size_t length_ = 0;
    std::vector<uint64_t> words_;
};

template <typename Fn>
void for_each_set_bit(const BitVector &v, Fn &&fn) {
    const auto &w = v.words();
    for (size_t wi = 0; wi < w.size(); wi++) {
        uint64_t word = w[wi];
        while (word) {
            fn(wi * 64 + (size_t)std::countr_zero(word));
            word &= word - 1;
        }
    }
}

// Row-major matrix over GF(2).
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);
    static BitMatrix identity(size_t n);
    static BitMatrix from_strings(const std::vector<std::string> &rows);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool get(size_t r, size_t c) const;
    void set(size_t r, size_t c, bool value);
    BitVector &row(size_t r);
    const BitVector &row(size_t r) const;
    BitVector column(size_t c) const;
    BitMatrix transposed() const;
    bool is_zero() const;
    bool is_symmetric() const;
    bool has_zero_diagonal() const;
    bool operator==(const BitMatrix &) const = default;
    std::string str() const;

  private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<BitVector> data_;
};

// Matrix product over GF(2). Row i of the result is the XOR of the rows of
// `b` selected by the set bits of row i of `a`.
BitMatrix mat_mul(const BitMatrix &a, const BitMatrix &b);
BitVector mat_vec(const BitMatrix &a, const BitVector &x);
size_t rank(const BitMatrix &m);
// Indices of the lexicographically first maximal independent set of columns.
std::vector<size_t> column_basis(const BitMatrix &m);
// Basis of the right kernel {x : m*x = 0}, one vector per free column.
std::vector<BitVector> kernel_basis(const BitMatrix &m);
// Coefficients c with sum_i c_i * basis[i] == target, if target is in the
// span. Unique when the basis vectors are independent.
std::optional<BitVector> solve_in_span(std::span<const BitVector> basis, const BitVector &target);

}  // namespace hypergram

#endif
