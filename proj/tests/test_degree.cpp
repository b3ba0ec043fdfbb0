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

#include <random>

#include "doctest.h"

#include "hypergram/assign.hpp"
#include "hypergram/degree.hpp"
#include "hypergram/errors.hpp"
#include "hypergram/geometry.hpp"
#include "support/random_fixtures.hpp"

using namespace hypergram;
using namespace hypergram::testing;

namespace {

// Contexts where the witness's classical signs disagree with s.
size_t witness_distance(const Hypergram &hg, const SignVector &s,
                        const ClassicalAssignment &witness) {
    SignVector classical = classical_sign_function(witness, hg);
    size_t d = 0;
    for (size_t e = 0; e < s.signs.size(); e++) {
        if (classical.signs[e] != s.signs[e]) {
            d++;
        }
    }
    return d;
}

SignVector auto_signs(const Hypergram &hg) {
    return sign_function(pauli_assignment_from_anticommutations(hg), hg);
}

}  // namespace

TEST_SUITE("degree") {

TEST_CASE("negativity vector marks the -1 entries") {
    SignVector s;
    s.signs = {1, -1, 1, -1, -1};
    BitVector e = negativity_vector(s);
    CHECK(e.str() == "01011");
}

TEST_CASE("doily degree is 3 however it is computed") {
    auto [hg, a] = doily();
    SignVector s = sign_function(a, hg);

    DegreeResult exact = degree_exact(hg, s);
    CHECK(exact.value == 3);
    CHECK(exact.exact);
    CHECK(exact.method == "exhaustive");
    CHECK(witness_distance(hg, s, exact.witness) == 3);

    DegreeResult brute = degree_bruteforce(hg, s);
    CHECK(brute.value == 3);
    CHECK(brute.method == "bruteforce");

    DegreeResult heur = degree_heuristic(hg, s);
    CHECK(heur.value == 3);
    CHECK_FALSE(heur.exact);
    CHECK(witness_distance(hg, s, heur.witness) == 3);
}

TEST_CASE("degree is invariant across assignments of the doily") {
    Hypergram hg = doily().hypergram;
    CHECK(degree_exact(hg, auto_signs(hg)).value == 3);
    TransferExample ex = doily_transfer_example();
    CHECK(degree_exact(hg, sign_function(ex.first, hg)).value == 3);
    CHECK(degree_exact(hg, sign_function(ex.second, hg)).value == 3);
}

TEST_CASE("two-spread degree is 1 with a one-line witness") {
    auto [hg, a] = two_spread();
    SignVector s = sign_function(a, hg);
    DegreeResult r = degree_exact(hg, s);
    CHECK(r.value == 1);
    CHECK(witness_distance(hg, s, r.witness) == 1);
    CHECK(degree_bruteforce(hg, s).value == 1);
}

TEST_CASE("the three-qubit variant is noncontextual") {
    auto [hg, a] = two_spread_variant();
    SignVector s = sign_function(a, hg);
    DegreeResult r = degree_exact(hg, s);
    CHECK(r.value == 0);
    CHECK(witness_distance(hg, s, r.witness) == 0);
    DegreeResult h = degree_heuristic(hg, s);
    CHECK(h.value == 0);
    CHECK(h.exact);  // a zero from the heuristic certifies itself
}

TEST_CASE("exact solver refuses ranks past the threshold") {
    LineConfiguration lc = wn_lines(3);
    Hypergram hg = Hypergram::from_data(line_configuration_data(lc));
    try {
        (void)degree_exact(hg, lc.signs);
        FAIL("expected ThresholdExceeded");
    } catch (const DomainError &ex) {
        CHECK(ex.code() == Err::ThresholdExceeded);
    }
    CHECK_THROWS_AS((void)degree_bruteforce(hg, lc.signs), DomainError);
}

TEST_CASE("heuristic on the three-qubit lines reaches the known value") {
    LineConfiguration lc = wn_lines(3);
    Hypergram hg = Hypergram::from_data(line_configuration_data(lc));
    HeuristicParams params;
    params.seed = 7;
    DegreeResult r = degree_heuristic(hg, lc.signs, params);
    CHECK(r.value == 63);
    CHECK_FALSE(r.exact);
    CHECK(r.method == "heuristic");
    CHECK(witness_distance(hg, lc.signs, r.witness) == 63);
}

TEST_CASE("heuristic results are reproducible and thread-invariant") {
    LineConfiguration lc = wn_lines(3);
    Hypergram hg = Hypergram::from_data(line_configuration_data(lc));
    HeuristicParams params;
    params.seed = 12345;
    params.restarts = 8;
    params.max_flips = 400;
    DegreeResult a = degree_heuristic(hg, lc.signs, params, 1);
    DegreeResult b = degree_heuristic(hg, lc.signs, params, 1);
    DegreeResult c = degree_heuristic(hg, lc.signs, params, 4);
    CHECK(a.value == b.value);
    CHECK(a.witness.values == b.witness.values);
    CHECK(a.value == c.value);
    CHECK(a.witness.values == c.witness.values);
}

TEST_CASE("different seeds still bound the true degree") {
    auto [hg, a] = two_spread();
    SignVector s = sign_function(a, hg);
    for (uint64_t seed : {1ull, 2ull, 99ull}) {
        HeuristicParams params;
        params.seed = seed;
        params.restarts = 4;
        params.max_flips = 200;
        DegreeResult r = degree_heuristic(hg, s, params);
        CHECK(r.value >= 1);
        CHECK(witness_distance(hg, s, r.witness) == r.value);
    }
}

TEST_CASE("exact equals brute force on random instances") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 100; round++) {
        RandomSigned sample = random_signed_hypergram(rng, 14);
        DegreeResult exact = degree_exact(sample.hypergram, sample.signs);
        DegreeResult brute = degree_bruteforce(sample.hypergram, sample.signs);
        CHECK(exact.value == brute.value);
        CHECK(witness_distance(sample.hypergram, sample.signs, exact.witness) == exact.value);
        CHECK(witness_distance(sample.hypergram, sample.signs, brute.witness) == brute.value);
    }
}

TEST_CASE("sign vector length must match the context count") {
    Hypergram hg = doily().hypergram;
    SignVector s;
    s.signs.assign(9, 1);
    CHECK_THROWS_AS((void)degree_exact(hg, s), DomainError);
}

TEST_CASE("noncontextual bound") {
    CHECK(noncontextual_bound(15, 3) == 9);
    CHECK(noncontextual_bound(10, 1) == 8);
    CHECK(noncontextual_bound(315, 63) == 189);
    CHECK(noncontextual_bound(4, 2) == 0);
    CHECK_THROWS_AS((void)noncontextual_bound(3, 4), std::invalid_argument);
}

TEST_CASE("contextuality predicate") {
    auto [hg_d, a_d] = doily();
    CHECK(is_contextual(hg_d, sign_function(a_d, hg_d)));
    auto [hg_v, a_v] = two_spread_variant();
    CHECK_FALSE(is_contextual(hg_v, sign_function(a_v, hg_v)));
}

}  // TEST_SUITE
