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

#ifndef HYPERGRAM_PAULI_HPP
#define HYPERGRAM_PAULI_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypergram/gf2.hpp"

namespace hypergram {

// Single-qubit letters, coded so that code == (z_bit << 1) | x_bit.
enum class Letter : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char letter_char(Letter l);
Letter letter_from_char(char c);  // throws std::invalid_argument

// A word of Pauli letters, one per qubit, with no phase attached.
// Comparison is lexicographic over the letter codes (I < X < Z < Y).
class PauliObservable {
  public:
    PauliObservable() = default;              // zero-width word
    explicit PauliObservable(size_t qubits);  // identity word
    static PauliObservable from_string(std::string_view s);
    static PauliObservable from_codes(std::vector<uint8_t> codes);

    size_t qubits() const {
        return codes_.size();
    }
    Letter letter(size_t j) const {
        return (Letter)codes_[j];
    }
    uint8_t code(size_t j) const {
        return codes_[j];
    }
    bool is_identity() const;
    std::string str() const;
    auto operator<=>(const PauliObservable &) const = default;

  private:
    std::vector<uint8_t> codes_;
};

// An observable together with a power of i: (i^phase) * word.
struct PhasedPauli {
    PauliObservable word;
    uint8_t phase = 0;  // exponent of i, mod 4
    bool operator==(const PhasedPauli &) const = default;
};

// Binary encoding: qubit j of p occupies bits 2j (z part) and 2j+1 (x part),
// so I=(0,0), X=(0,1), Y=(1,1), Z=(1,0).
BitVector encode(const PauliObservable &p);
PauliObservable decode(const BitVector &v);  // throws on odd length

// Symplectic form sum_j u_{2j} v_{2j+1} + u_{2j+1} v_{2j}; zero exactly when
// the encoded observables commute.
bool symplectic_form(const BitVector &u, const BitVector &v);
bool commutes(const PauliObservable &p, const PauliObservable &q);

PhasedPauli multiply(const PhasedPauli &a, const PhasedPauli &b);
PhasedPauli multiply(const PauliObservable &a, const PauliObservable &b);

// Left-to-right product of the factors with full phase tracking.
PhasedPauli phased_product(std::span<const PauliObservable> factors);

// Sign s with product(factors) == s * identity. The factors must pairwise
// commute (checked; DomainError NonCommutingInput), the product's word must
// be the identity (NonIdentityProduct) and its phase must be real
// (ImaginaryPhase).
int product_sign(std::span<const PauliObservable> factors);

PauliObservable tensor(const PauliObservable &a, const PauliObservable &b);

}  // namespace hypergram

#endif
