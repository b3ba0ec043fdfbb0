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

#include <filesystem>

#include "doctest.h"
#include "json.hpp"

#include "hypergram/errors.hpp"
#include "hypergram/geometry.hpp"
#include "hypergram/io.hpp"

using namespace hypergram;

TEST_SUITE("io") {

TEST_CASE("hypergram files round trip") {
    HypergramData data = doily().hypergram.data();
    HypergramData back = io::parse_hypergram(io::hypergram_json(data));
    CHECK(back == data);
}

TEST_CASE("hypergram parsing normalizes indices") {
    std::string text = R"({
        "vertices": 4,
        "hyperedges": [[3, 1, 3], [2, 4]],
        "anticommutations": [[4, 1], [1, 4], [2, 3]]
    })";
    HypergramData data = io::parse_hypergram(text);
    CHECK(data.vertex_count == 4);
    CHECK(data.hyperedges == std::vector<std::vector<uint32_t>>{{0, 2}, {1, 3}});
    CHECK(data.anticommutations ==
          std::vector<std::pair<uint32_t, uint32_t>>{{0, 3}, {1, 2}});
}

TEST_CASE("hypergram parse errors") {
    CHECK_THROWS_AS((void)io::parse_hypergram("{nope"), io::ParseError);
    CHECK_THROWS_AS((void)io::parse_hypergram("[1, 2]"), io::ParseError);
    CHECK_THROWS_AS((void)io::parse_hypergram(R"({"hyperedges": []})"), io::ParseError);
    CHECK_THROWS_AS((void)io::parse_hypergram(R"({"vertices": 0, "hyperedges": []})"),
                    io::ParseError);
    CHECK_THROWS_AS((void)io::parse_hypergram(R"({"vertices": 2})"), io::ParseError);
    CHECK_THROWS_AS(
        (void)io::parse_hypergram(R"({"vertices": 2, "hyperedges": [[1, "x"]]})"),
        io::ParseError);
    CHECK_THROWS_AS(
        (void)io::parse_hypergram(
            R"({"version": 2, "vertices": 2, "hyperedges": [[1, 2]]})"),
        io::ParseError);
    CHECK_THROWS_AS(
        (void)io::parse_hypergram(
            R"({"vertices": 2, "hyperedges": [[1, 2]], "anticommutations": [[1]]})"),
        io::ParseError);
}

TEST_CASE("out-of-range indices raise InvalidHypergram, not ParseError") {
    std::string text = R"({"vertices": 3, "hyperedges": [[1, 2], [2, 9]]})";
    try {
        (void)io::parse_hypergram(text);
        FAIL("expected InvalidHypergram");
    } catch (const InvalidHypergram &ex) {
        REQUIRE(ex.report().issues.size() == 1);
        CHECK(ex.report().has(Violation::OutOfRange));
    }
}

TEST_CASE("structural problems are left for validate") {
    std::string text = R"({
        "vertices": 3,
        "hyperedges": [[1, 2, 3], [1, 2, 3]],
        "anticommutations": [[1, 1]]
    })";
    HypergramData data = io::parse_hypergram(text);  // parses fine
    ValidationReport report = validate(data);
    CHECK(report.has(Violation::DuplicateHyperedge));
    CHECK(report.has(Violation::LoopEdge));
}

TEST_CASE("assignment files round trip") {
    PauliAssignment a = doily().assignment;
    PauliAssignment back = io::parse_assignment(io::assignment_json(a));
    CHECK(back.qubits == a.qubits);
    CHECK(back.labels == a.labels);
}

TEST_CASE("assignment parse errors") {
    CHECK_THROWS_AS((void)io::parse_assignment(R"({"n": 2})"), io::ParseError);
    CHECK_THROWS_AS(
        (void)io::parse_assignment(R"({"n": 2, "labels": {"1": "IQ"}})"), io::ParseError);
    CHECK_THROWS_AS(
        (void)io::parse_assignment(R"({"n": 2, "labels": {"1": "XXX"}})"), io::ParseError);
    CHECK_THROWS_AS(
        (void)io::parse_assignment(R"({"n": 2, "labels": {"0": "XX"}})"), io::ParseError);
    CHECK_THROWS_AS(
        (void)io::parse_assignment(R"({"n": 2, "labels": {"1": "XX", "3": "ZZ"}})"),
        io::ParseError);
}

TEST_CASE("classical value files round trip and must be total") {
    ClassicalAssignment a;
    a.values = {1, -1, -1, 1};
    ClassicalAssignment back = io::parse_classical(io::classical_json(a), 4);
    CHECK(back.values == a.values);

    CHECK_THROWS_AS((void)io::parse_classical(R"({"values": {"1": 2}})", 1),
                    io::ParseError);
    CHECK_THROWS_AS((void)io::parse_classical(R"({"values": {"1": 1, "5": 1}})", 4),
                    io::ParseError);
    try {
        (void)io::parse_classical(R"({"values": {"1": 1, "3": 1}})", 3);
        FAIL("expected MissingValue");
    } catch (const DomainError &ex) {
        CHECK(ex.code() == Err::MissingValue);
    }
}

TEST_CASE("sign files accept wrapped and bare arrays") {
    SignVector s;
    s.signs = {1, -1, 1};
    SignVector back = io::parse_signs(io::signs_json(s));
    CHECK(back.signs == s.signs);
    CHECK(io::parse_signs("[1, -1, 1]").signs == s.signs);
    CHECK_THROWS_AS((void)io::parse_signs(R"({"values": []})"), io::ParseError);
    CHECK_THROWS_AS((void)io::parse_signs("[1, 0]"), io::ParseError);
}

TEST_CASE("line configuration files re-parse as hypergrams with signs") {
    LineConfiguration lc = wn_lines(2);
    std::string text = io::line_configuration_json(lc);
    HypergramData data = io::parse_hypergram(text);
    CHECK(data == line_configuration_data(lc));
    CHECK(validate(data).ok());
    CHECK(io::parse_signs(text).signs == lc.signs.signs);
}

TEST_CASE("report and result serializers emit the documented fields") {
    using nlohmann::json;
    ValidationReport report = validate(nonassignable_example());
    json report_json = json::parse(io::validation_report_json(report));
    CHECK(report_json["valid"] == false);
    CHECK(report_json["issues"].size() == report.issues.size());
    CHECK(report_json["issues"][0]["code"] == "NotReducedZeroRow");

    DegreeResult result;
    result.value = 3;
    result.exact = true;
    result.method = "exhaustive";
    result.witness.values = {1, -1};
    json result_json = json::parse(io::degree_result_json(result));
    CHECK(result_json["degree"] == 3);
    CHECK(result_json["exact"] == true);
    CHECK(result_json["method"] == "exhaustive");
    CHECK(result_json["witness"]["2"] == -1);

    AssignabilityCheck check = check_assignability(nonassignable_example());
    json check_json = json::parse(io::assignability_json(check, report));
    CHECK(check_json["assignable"] == false);
    CHECK(check_json["valid"] == false);
    // Entries are reported 1-based.
    CHECK(check_json["nonzero_entries"][0] == json::array({1, 5}));
    CHECK(check_json["nonzero_entries"][1] == json::array({2, 3}));
}

TEST_CASE("file helpers") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "hypergram-io-test";
    fs::create_directories(dir);
    fs::path file = dir / "roundtrip.json";
    io::write_file(file.string(), "{\"version\": 1}\n");
    CHECK(io::read_file(file.string()) == "{\"version\": 1}\n");
    CHECK_THROWS_AS((void)io::read_file((dir / "missing.json").string()), io::ParseError);
    fs::remove_all(dir);
}

}  // TEST_SUITE
