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

#ifndef HYPERGRAM_ASSIGN_HPP
#define HYPERGRAM_ASSIGN_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypergram/assignment.hpp"
#include "hypergram/hypergram.hpp"

namespace hypergram {

// First position (i, j) with i < j and b[i][j] == 1, scanning rows top-down
// and each row left-to-right past the diagonal.
std::optional<std::pair<size_t, size_t>> find_overdiagonal_one(const BitMatrix &b);

// Builds labels whose pairwise symplectic forms realize `gram` (symmetric,
// zero diagonal; checked). Runs in O(|V|^3 / w) by repeated symmetric rank-2
// elimination; the resulting width is rank(gram) / 2 qubits. With
// check_invariants set, every elimination step re-verifies the partial Gram
// condition, symmetry, the zero diagonal, and the rank dropping by exactly 2.
PauliAssignment labeling_from_gram(const BitMatrix &gram, bool check_invariants = false);

// Pauli assignment of a valid hypergram; DomainError NotAssignable when
// C(H) * A(G) != 0.
PauliAssignment pauli_assignment_from_anticommutations(const Hypergram &hg,
                                                       bool check_invariants = false);

// Sign of the label product over each hyperedge, in hyperedge list order.
SignVector sign_function(const PauliAssignment &a, const Hypergram &hg);

// Product of the classical values over each hyperedge.
SignVector classical_sign_function(const ClassicalAssignment &a, const Hypergram &hg);

struct AssignmentCheck {
    bool ok = false;
    std::string detail;  // first failed clause, empty when ok
};

// Full validity check of a labeling against a hypergram: sizes, uniform
// width, no identity label, all labels distinct, anticommutation exactly on
// G, and every hyperedge product equal to +/- identity.
AssignmentCheck check_assignment(const PauliAssignment &a, const Hypergram &hg);
bool verify_assignment(const PauliAssignment &a, const Hypergram &hg);

// Indices (into the label list) of a maximal independent subset: no product
// over a subset of the returned observables is +/- identity. Greedy, so the
// lexicographically first such subset. Inputs must pairwise commute.
std::vector<size_t> basis(std::span<const PauliObservable> observables);

// Classical +/-1 values for a pairwise-commuting family that satisfy every
// context's sign constraint: value(t) is the sign relating t to the product
// of its basis decomposition. Contexts hold 0-based indices into
// `observables`; each must multiply to +/- identity (InvalidContext).
ClassicalAssignment classical_assignment(std::span<const PauliObservable> observables,
                                         const std::vector<std::vector<uint32_t>> &contexts);

// Vertex-wise tensor of two labelings of the same vertex set. Typed as a
// commutative labeling: when both arguments are valid assignments of one
// hypergram, all pairs commute.
CommutativeLabeling tensor_assignment(const PauliAssignment &a1, const PauliAssignment &a2);

// Moves classical values across assignments of one hypergram:
// out(v) = values1(v) * c(v) where c is a classical assignment of the
// vertex-wise tensor configuration. The unsatisfied hyperedge set is
// preserved exactly.
ClassicalAssignment transfer_classical(const PauliAssignment &a1, const PauliAssignment &a2,
                                       const ClassicalAssignment &values1, const Hypergram &hg);

// Hyperedge indices where the classical sign disagrees with the label sign.
std::vector<size_t> unsatisfied_set(const PauliAssignment &a, const ClassicalAssignment &c,
                                    const Hypergram &hg);

// Reads a commuting-context configuration back into hypergram form: vertices
// are the observables, hyperedges the contexts, anticommutation pairs from
// the symplectic form. Observables must be distinct (DuplicateObservable)
// and non-identity (IdentityObservable); the read-back structure must pass
// validation (InvalidHypergram otherwise). The returned assignment is the
// input labeling and is always valid for the returned hypergram.
std::pair<Hypergram, PauliAssignment> hypergram_from_configuration(
    std::span<const PauliObservable> observables,
    const std::vector<std::vector<uint32_t>> &contexts);

}  // namespace hypergram

#endif
