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

#ifndef HYPERGRAM_ASSIGNMENT_HPP
#define HYPERGRAM_ASSIGNMENT_HPP

#include <cstdint>
#include <vector>

#include "hypergram/pauli.hpp"

namespace hypergram {

// Vertex-indexed Pauli labeling: labels[v] is the word at vertex v.
// Whether it is valid is relative to a hypergram; see verify_assignment.
struct PauliAssignment {
    size_t qubits = 0;
    std::vector<PauliObservable> labels;
    bool operator==(const PauliAssignment &) const = default;
};

// Vertex-indexed classical values, each +1 or -1.
struct ClassicalAssignment {
    std::vector<int8_t> values;
    bool operator==(const ClassicalAssignment &) const = default;
};

// Hyperedge-indexed signs, each +1 or -1, in hyperedge list order.
struct SignVector {
    std::vector<int8_t> signs;
    bool operator==(const SignVector &) const = default;
};

// Vertex-indexed pairwise-commuting words. The tensor of two assignments of
// one hypergram lands here rather than in PauliAssignment: its Gram matrix
// is all zeros, not the hypergram's anticommutation matrix.
struct CommutativeLabeling {
    size_t qubits = 0;
    std::vector<PauliObservable> labels;
    bool operator==(const CommutativeLabeling &) const = default;
};

}  // namespace hypergram

#endif
