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

#include <algorithm>
#include <set>

#include "doctest.h"

#include "hypergram/assign.hpp"
#include "hypergram/degree.hpp"
#include "hypergram/geometry.hpp"

using namespace hypergram;

namespace {

size_t negatives(const SignVector &s) {
    return (size_t)std::count(s.signs.begin(), s.signs.end(), (int8_t)-1);
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("point enumeration is ordered and complete") {
    auto one = wn_points(1);
    REQUIRE(one.size() == 3);
    CHECK(one[0].str() == "X");
    CHECK(one[1].str() == "Z");
    CHECK(one[2].str() == "Y");

    auto two = wn_points(2);
    CHECK(two.size() == 15);
    CHECK(two.front().str() == "IX");
    CHECK(two.back().str() == "YY");
    CHECK(std::is_sorted(two.begin(), two.end()));
    CHECK(std::set<PauliObservable>(two.begin(), two.end()).size() == 15);

    CHECK_THROWS_AS((void)wn_points(0), std::invalid_argument);
    CHECK_THROWS_AS((void)wn_points(16), std::invalid_argument);
}

TEST_CASE("single-qubit letters admit no line") {
    LineConfiguration lc = wn_lines(1);
    CHECK(lc.lines.empty());
    CHECK(count_lines(1) == 0);
    CHECK(count_negative_lines(1) == 0);
}

TEST_CASE("lines are commuting triples that close under the product") {
    LineConfiguration lc = wn_lines(2);
    REQUIRE(lc.lines.size() == 15);
    CHECK(negatives(lc.signs) == 3);
    std::set<std::array<uint32_t, 3>> seen;
    for (size_t e = 0; e < lc.lines.size(); e++) {
        const auto &line = lc.lines[e];
        CHECK(line[0] < line[1]);
        CHECK(line[1] < line[2]);
        seen.insert(line);
        std::vector<PauliObservable> triple{lc.points[line[0]], lc.points[line[1]],
                                            lc.points[line[2]]};
        CHECK(product_sign(triple) == lc.signs.signs[e]);
    }
    CHECK(seen.size() == 15);  // no triple recorded twice
}

TEST_CASE("enumeration matches the closed-form counts") {
    for (size_t n = 1; n <= 4; n++) {
        LineConfiguration lc = wn_lines(n);
        CHECK(lc.lines.size() == count_lines(n));
        CHECK(negatives(lc.signs) == count_negative_lines(n));
    }
}

TEST_CASE("closed-form counts reproduce the known table") {
    CHECK(count_lines(2) == 15);
    CHECK(count_negative_lines(2) == 3);
    CHECK(count_lines(3) == 315);
    CHECK(count_negative_lines(3) == 90);
    CHECK(count_lines(4) == 5355);
    CHECK(count_negative_lines(4) == 1908);
    CHECK(count_lines(5) == 86955);
    CHECK(count_negative_lines(5) == 35400);
    CHECK(count_lines(6) == 1396395);
    CHECK(count_negative_lines(6) == 615888);
    CHECK(count_lines(7) == 22362795);
    CHECK(count_negative_lines(7) == 10352160);
    CHECK_THROWS_AS((void)count_lines(0), std::invalid_argument);
    CHECK_THROWS_AS((void)wn_lines(8), std::invalid_argument);
}

TEST_CASE("line configurations convert to valid assignable hypergrams") {
    for (size_t n = 2; n <= 3; n++) {
        LineConfiguration lc = wn_lines(n);
        HypergramData data = line_configuration_data(lc);
        CHECK(validate(data).ok());
        CHECK(check_assignability(data).assignable);
        Hypergram hg = Hypergram::from_data(std::move(data));
        PauliAssignment a{lc.qubits, lc.points};
        CHECK(verify_assignment(a, hg));
        CHECK(sign_function(a, hg).signs == lc.signs.signs);
    }
}

TEST_CASE("the two-qubit line configuration has degree 3") {
    LineConfiguration lc = wn_lines(2);
    Hypergram hg = Hypergram::from_data(line_configuration_data(lc));
    CHECK(degree_exact(hg, lc.signs).value == 3);
}

TEST_CASE("doily fixture") {
    auto [hg, a] = doily();
    CHECK(hg.vertex_count() == 15);
    CHECK(hg.hyperedges().size() == 15);
    CHECK(validate(hg.data()).ok());
    CHECK(a.qubits == 2);
    CHECK(a.labels.front().str() == "IX");
    CHECK(a.labels.back().str() == "YY");
    CHECK(verify_assignment(a, hg));
}

TEST_CASE("two-spread fixture keeps the doily anticommutation graph") {
    auto [hg, a] = two_spread();
    CHECK(hg.hyperedges().size() == 10);
    CHECK(hg.anticommutations() == doily().hypergram.anticommutations());
    CHECK(verify_assignment(a, hg));
    // Each point lies on two of the ten lines.
    std::vector<int> incidence(15, 0);
    for (const auto &edge : hg.hyperedges()) {
        for (uint32_t v : edge) {
            incidence[v]++;
        }
    }
    CHECK(std::count(incidence.begin(), incidence.end(), 2) == 15);
}

TEST_CASE("two-spread variant uses three qubits and a different graph") {
    auto [hg, a] = two_spread_variant();
    CHECK(hg.hyperedges().size() == 10);
    CHECK(hg.hyperedges() == two_spread().hypergram.hyperedges());
    CHECK(hg.anticommutations().size() == 45);
    CHECK(hg.anticommutations() != two_spread().hypergram.anticommutations());
    CHECK(a.qubits == 3);
    CHECK(verify_assignment(a, hg));
}

TEST_CASE("transfer example labelings are valid doily assignments") {
    Hypergram hg = doily().hypergram;
    TransferExample ex = doily_transfer_example();
    CHECK(ex.first.qubits == 3);
    CHECK(ex.second.qubits == 4);
    CHECK(verify_assignment(ex.first, hg));
    CHECK(verify_assignment(ex.second, hg));
    CHECK(ex.first_values.values.size() == 15);
    CHECK(ex.second_values.values.size() == 15);
}

TEST_CASE("nonassignable example is frozen") {
    HypergramData data = nonassignable_example();
    CHECK(data.vertex_count == 5);
    CHECK(data.hyperedges == std::vector<std::vector<uint32_t>>{{0, 1, 2}, {0, 3, 4}});
    CHECK(data.anticommutations == std::vector<std::pair<uint32_t, uint32_t>>{{2, 4}});
}

}  // TEST_SUITE
