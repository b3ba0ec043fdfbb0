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

#include "hypergram/pauli.hpp"

#include <stdexcept>

#include "hypergram/errors.hpp"

namespace hypergram {

namespace {

constexpr char kLetterChars[4] = {'I', 'X', 'Z', 'Y'};

// kPhase[a][b] = k with letter(a) * letter(b) == i^k letter(a ^ b).
// X*Y = iZ, Y*Z = iX, Z*X = iY; the reversals pick up i^3.
constexpr uint8_t kPhase[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 3, 1},
    {0, 1, 0, 3},
    {0, 3, 1, 0},
};

}  // namespace

char letter_char(Letter l) {
    return kLetterChars[(uint8_t)l];
}

Letter letter_from_char(char c) {
    switch (c) {
        case 'I':
            return Letter::I;
        case 'X':
            return Letter::X;
        case 'Z':
            return Letter::Z;
        case 'Y':
            return Letter::Y;
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
    }
}

PauliObservable::PauliObservable(size_t qubits) : codes_(qubits, 0) {
}

PauliObservable PauliObservable::from_string(std::string_view s) {
    PauliObservable p;
    p.codes_.reserve(s.size());
    for (char c : s) {
        p.codes_.push_back((uint8_t)letter_from_char(c));
    }
    return p;
}

PauliObservable PauliObservable::from_codes(std::vector<uint8_t> codes) {
    for (uint8_t c : codes) {
        if (c > 3) {
            throw std::invalid_argument("letter code out of range");
        }
    }
    PauliObservable p;
    p.codes_ = std::move(codes);
    return p;
}

bool PauliObservable::is_identity() const {
    for (uint8_t c : codes_) {
        if (c) {
            return false;
        }
    }
    return true;
}

std::string PauliObservable::str() const {
    std::string s(codes_.size(), 'I');
    for (size_t j = 0; j < codes_.size(); j++) {
        s[j] = kLetterChars[codes_[j]];
    }
    return s;
}

BitVector encode(const PauliObservable &p) {
    BitVector v(2 * p.qubits());
    for (size_t j = 0; j < p.qubits(); j++) {
        uint8_t c = p.code(j);
        if (c >> 1) {
            v.set(2 * j, true);  // z part
        }
        if (c & 1) {
            v.set(2 * j + 1, true);  // x part
        }
    }
    return v;
}

PauliObservable decode(const BitVector &v) {
    if (v.size() % 2 != 0) {
        throw std::invalid_argument("encoding length must be even");
    }
    std::vector<uint8_t> codes(v.size() / 2, 0);
    for (size_t j = 0; j < codes.size(); j++) {
        codes[j] = (uint8_t)((v.get(2 * j) << 1) | (uint8_t)v.get(2 * j + 1));
    }
    return PauliObservable::from_codes(std::move(codes));
}

bool symplectic_form(const BitVector &u, const BitVector &v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("symplectic form of vectors of different lengths");
    }
    if (u.size() % 2 != 0) {
        throw std::invalid_argument("symplectic form needs even length");
    }
    constexpr uint64_t kEven = 0x5555555555555555ull;
    uint64_t acc = 0;
    const auto &uw = u.words();
    const auto &vw = v.words();
    for (size_t i = 0; i < uw.size(); i++) {
        // Swap the (z, x) halves of each pair of v, then AND with u.
        uint64_t swapped = ((vw[i] & kEven) << 1) | ((vw[i] >> 1) & kEven);
        acc ^= uw[i] & swapped;
    }
    return std::popcount(acc) & 1;
}

bool commutes(const PauliObservable &p, const PauliObservable &q) {
    if (p.qubits() != q.qubits()) {
        throw std::invalid_argument("observables act on different qubit counts");
    }
    uint8_t parity = 0;
    for (size_t j = 0; j < p.qubits(); j++) {
        uint8_t a = p.code(j);
        uint8_t b = q.code(j);
        // Single-qubit letters anticommute exactly when both are
        // non-identity and distinct.
        if (a && b && a != b) {
            parity ^= 1;
        }
    }
    return parity == 0;
}

PhasedPauli multiply(const PhasedPauli &a, const PhasedPauli &b) {
    if (a.word.qubits() != b.word.qubits()) {
        throw std::invalid_argument("observables act on different qubit counts");
    }
    std::vector<uint8_t> codes(a.word.qubits());
    uint8_t phase = (uint8_t)((a.phase + b.phase) & 3);
    for (size_t j = 0; j < codes.size(); j++) {
        uint8_t ca = a.word.code(j);
        uint8_t cb = b.word.code(j);
        phase = (uint8_t)((phase + kPhase[ca][cb]) & 3);
        codes[j] = ca ^ cb;
    }
    return PhasedPauli{PauliObservable::from_codes(std::move(codes)), phase};
}

PhasedPauli multiply(const PauliObservable &a, const PauliObservable &b) {
    return multiply(PhasedPauli{a, 0}, PhasedPauli{b, 0});
}

PhasedPauli phased_product(std::span<const PauliObservable> factors) {
    if (factors.empty()) {
        throw std::invalid_argument("product of zero factors");
    }
    PhasedPauli acc{PauliObservable(factors[0].qubits()), 0};
    for (const PauliObservable &f : factors) {
        acc = multiply(acc, PhasedPauli{f, 0});
    }
    return acc;
}

int product_sign(std::span<const PauliObservable> factors) {
    for (size_t i = 0; i < factors.size(); i++) {
        for (size_t j = i + 1; j < factors.size(); j++) {
            if (!commutes(factors[i], factors[j])) {
                throw DomainError(Err::NonCommutingInput,
                                  "factors " + std::to_string(i) + " and " + std::to_string(j) +
                                      " anticommute");
            }
        }
    }
    PhasedPauli prod = phased_product(factors);
    if (!prod.word.is_identity()) {
        throw DomainError(Err::NonIdentityProduct, "product is " + prod.word.str());
    }
    if (prod.phase & 1) {
        throw DomainError(Err::ImaginaryPhase, "product has phase i^" + std::to_string(prod.phase));
    }
    return prod.phase == 0 ? 1 : -1;
}

PauliObservable tensor(const PauliObservable &a, const PauliObservable &b) {
    std::vector<uint8_t> codes;
    codes.reserve(a.qubits() + b.qubits());
    for (size_t j = 0; j < a.qubits(); j++) {
        codes.push_back(a.code(j));
    }
    for (size_t j = 0; j < b.qubits(); j++) {
        codes.push_back(b.code(j));
    }
    return PauliObservable::from_codes(std::move(codes));
}

}  // namespace hypergram
