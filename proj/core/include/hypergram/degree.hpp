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

#ifndef HYPERGRAM_DEGREE_HPP
#define HYPERGRAM_DEGREE_HPP

#include <cstdint>
#include <string>

#include "hypergram/assignment.hpp"
#include "hypergram/hypergram.hpp"

namespace hypergram {

// Hyperedge-indexed 0/1 vector with a 1 where the sign is -1.
BitVector negativity_vector(const SignVector &s);

struct DegreeResult {
    uint64_t value = 0;
    bool exact = false;
    ClassicalAssignment witness;
    std::string method;  // "exhaustive", "bruteforce", or "heuristic"
};

// The degree of (hg, s) is the minimum Hamming distance from the negativity
// vector of s to the column space of C(H): min_x wt(C(H) x + e). The
// exhaustive solver walks the 2^rank codewords of the column space in
// Gray-code order.
inline constexpr unsigned kDefaultRankThreshold = 24;
inline constexpr unsigned kBruteForceLimit = 25;

DegreeResult degree_exact(const Hypergram &hg, const SignVector &s,
                          unsigned rank_threshold = kDefaultRankThreshold);

// Walks all 2^|V| classical assignments instead of the column space; only
// useful as an independent cross-check (|V| <= 25 guard, DomainError
// TooLarge).
DegreeResult degree_bruteforce(const Hypergram &hg, const SignVector &s);

struct HeuristicParams {
    uint32_t restarts = 32;
    uint32_t max_flips = 2000;
    uint32_t tabu_tenure = 7;
    uint64_t seed = 1;
};

// Random-restart steepest-descent bit flips with a tabu list. Restart 0
// starts from the all-zero vector, the rest from random vertices; results
// are deterministic for a given seed regardless of thread count. The
// returned value is an upper bound (exact only when it reaches 0) and the
// witness is re-verified by recomputing its distance.
DegreeResult degree_heuristic(const Hypergram &hg, const SignVector &s,
                              const HeuristicParams &params = {}, unsigned threads = 1);

// |contexts| - 2 * degree: the maximum number of satisfiable constraints for
// a noncontextual model is |contexts| - degree.
int64_t noncontextual_bound(size_t context_count, uint64_t degree);

bool is_contextual(const Hypergram &hg, const SignVector &s,
                   unsigned rank_threshold = kDefaultRankThreshold);

}  // namespace hypergram

#endif
