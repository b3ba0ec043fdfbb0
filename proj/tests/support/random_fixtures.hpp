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

#ifndef HYPERGRAM_TESTS_RANDOM_FIXTURES_HPP
#define HYPERGRAM_TESTS_RANDOM_FIXTURES_HPP

#include <random>

#include "hypergram/assignment.hpp"
#include "hypergram/gf2.hpp"
#include "hypergram/hypergram.hpp"
#include "hypergram/pauli.hpp"

namespace hypergram::testing {

BitVector random_vector(std::mt19937_64 &rng, size_t length);
BitMatrix random_matrix(std::mt19937_64 &rng, size_t rows, size_t cols);
// Symmetric with zero diagonal, i.e. a valid Gram input.
BitMatrix random_gram(std::mt19937_64 &rng, size_t n);

PauliObservable random_pauli(std::mt19937_64 &rng, size_t qubits, bool allow_identity = false);

struct RandomLabeled {
    Hypergram hypergram;
    PauliAssignment assignment;
};

// A valid, assignable hypergram sampled from the 2- or 3-qubit line
// configurations, together with the sampled labeling. Structures whose
// read-back fails validation (an isolated or duplicated anticommutation row
// in the sampled subset) are rejected and resampled.
RandomLabeled random_assignable_hypergram(std::mt19937_64 &rng);

struct RandomSigned {
    Hypergram hypergram;
    SignVector signs;
};

// A valid hypergram with random contexts, the full complement graph as G,
// and uniform random signs. Not assignable in general.
RandomSigned random_signed_hypergram(std::mt19937_64 &rng, uint32_t max_vertices);

}  // namespace hypergram::testing

#endif
