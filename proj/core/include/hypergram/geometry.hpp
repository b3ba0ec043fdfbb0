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

#ifndef HYPERGRAM_GEOMETRY_HPP
#define HYPERGRAM_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "hypergram/assignment.hpp"
#include "hypergram/hypergram.hpp"

namespace hypergram {

// The 4^n - 1 non-identity n-qubit words, ordered by their binary encoding
// (lexicographic with I < X < Z < Y per qubit). Point k has encoding key
// k + 1, so products can be looked up by XOR of keys.
std::vector<PauliObservable> wn_points(size_t n);

// Lines {p, q, p*q} over all commuting point pairs, each recorded once as a
// sorted index triple, with the sign its product multiplies to.
struct LineConfiguration {
    size_t qubits = 0;
    std::vector<PauliObservable> points;
    std::vector<std::array<uint32_t, 3>> lines;
    SignVector signs;
};

LineConfiguration wn_lines(size_t n);

// (V, H, G) view of a line configuration: vertices are points, hyperedges
// the lines, anticommutations from the symplectic form.
HypergramData line_configuration_data(const LineConfiguration &lc);

// Closed-form counts (valid for n <= 15):
//   lines:    (2^(n-1) - 1)(2^n + 1)(2^n - 1)(2^(n-1) + 1) / 3
//   negative: (16^n + 4^n - 2*10^n) / 24
// both cross-checked against enumeration in the tests.
uint64_t count_lines(size_t n);
uint64_t count_negative_lines(size_t n);

struct LabeledHypergram {
    Hypergram hypergram;
    PauliAssignment assignment;
};

// The 15-point, 15-line generalized quadrangle with its standard 2-qubit
// labeling; the labeling has three negative lines.
LabeledHypergram doily();

// The doily minus a spread of 5 lines (10 contexts), same anticommutation
// graph; the labeling has exactly one negative line, {7, 9, 14}.
LabeledHypergram two_spread();

// Same 10 contexts with a different anticommutation graph, realized by a
// 3-qubit labeling with two negative lines; its degree is 0.
LabeledHypergram two_spread_variant();

// Five vertices, two contexts, one anticommutation pair. Fails the
// reducedness clauses of validation, and C(H)*A(G) != 0, so it admits no
// Pauli assignment.
HypergramData nonassignable_example();

// Two labelings of the doily hypergram (3-qubit and 4-qubit) with classical
// values whose unsatisfied sets coincide; the worked example for
// transfer_classical.
struct TransferExample {
    PauliAssignment first;
    ClassicalAssignment first_values;
    PauliAssignment second;
    ClassicalAssignment second_values;
};

TransferExample doily_transfer_example();

}  // namespace hypergram

#endif
