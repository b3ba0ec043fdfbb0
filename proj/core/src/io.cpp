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

#include "hypergram/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "hypergram/errors.hpp"

namespace hypergram::io {

namespace {

using nlohmann::ordered_json;

ordered_json parse_root(const std::string &text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw ParseError("not valid JSON");
    }
    if (!j.is_object() && !j.is_array()) {
        throw ParseError("top-level value must be an object");
    }
    return j;
}

void check_version(const ordered_json &j) {
    if (j.contains("version") && j["version"] != 1) {
        throw ParseError("unsupported format version");
    }
}

uint64_t require_count(const ordered_json &j, const char *key) {
    if (!j.contains(key)) {
        throw ParseError(std::string("missing \"") + key + "\" field");
    }
    const auto &v = j[key];
    if (!v.is_number_unsigned() || v.get<uint64_t>() == 0) {
        throw ParseError(std::string("\"") + key + "\" must be a positive integer");
    }
    return v.get<uint64_t>();
}

// Reads a 1-based vertex index as written in the files. Range checking is
// left to the caller so all out-of-range positions can be reported together.
uint64_t vertex_index(const ordered_json &v, const char *where) {
    if (!v.is_number_unsigned() || v.get<uint64_t>() == 0) {
        throw ParseError(std::string(where) + " entries must be positive integers");
    }
    return v.get<uint64_t>();
}

}  // namespace

HypergramData parse_hypergram(const std::string &text) {
    ordered_json j = parse_root(text);
    if (!j.is_object()) {
        throw ParseError("hypergram file must be an object");
    }
    check_version(j);
    uint64_t vertices = require_count(j, "vertices");
    if (vertices > UINT32_MAX) {
        throw ParseError("\"vertices\" is too large");
    }

    HypergramData data;
    data.vertex_count = (uint32_t)vertices;

    if (!j.contains("hyperedges") || !j["hyperedges"].is_array()) {
        throw ParseError("missing \"hyperedges\" array");
    }
    ValidationReport range_report;
    for (size_t e = 0; e < j["hyperedges"].size(); e++) {
        const auto &edge = j["hyperedges"][e];
        if (!edge.is_array()) {
            throw ParseError("hyperedges must be arrays of vertex indices");
        }
        std::vector<uint32_t> members;
        for (const auto &v : edge) {
            uint64_t idx = vertex_index(v, "hyperedge");
            if (idx > vertices) {
                range_report.issues.push_back(
                    {Violation::OutOfRange, "hyperedge " + std::to_string(e + 1) +
                                                " references vertex " + std::to_string(idx)});
                continue;
            }
            members.push_back((uint32_t)(idx - 1));
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        data.hyperedges.push_back(std::move(members));
    }

    if (j.contains("anticommutations")) {
        if (!j["anticommutations"].is_array()) {
            throw ParseError("\"anticommutations\" must be an array of pairs");
        }
        for (size_t p = 0; p < j["anticommutations"].size(); p++) {
            const auto &pair = j["anticommutations"][p];
            if (!pair.is_array() || pair.size() != 2) {
                throw ParseError("anticommutation entries must be pairs");
            }
            uint64_t a = vertex_index(pair[0], "anticommutation");
            uint64_t b = vertex_index(pair[1], "anticommutation");
            if (a > vertices || b > vertices) {
                range_report.issues.push_back(
                    {Violation::OutOfRange, "anticommutation pair " + std::to_string(p + 1) +
                                                " references vertex " +
                                                std::to_string(a > vertices ? a : b)});
                continue;
            }
            uint32_t u = (uint32_t)(a - 1), v = (uint32_t)(b - 1);
            if (u > v) {
                std::swap(u, v);
            }
            data.anticommutations.push_back({u, v});
        }
        std::sort(data.anticommutations.begin(), data.anticommutations.end());
        data.anticommutations.erase(
            std::unique(data.anticommutations.begin(), data.anticommutations.end()),
            data.anticommutations.end());
    }

    if (!range_report.ok()) {
        throw InvalidHypergram(std::move(range_report));
    }
    return data;
}

std::string hypergram_json(const HypergramData &data) {
    ordered_json j;
    j["version"] = 1;
    j["vertices"] = data.vertex_count;
    j["hyperedges"] = ordered_json::array();
    for (const auto &edge : data.hyperedges) {
        ordered_json members = ordered_json::array();
        for (uint32_t v : edge) {
            members.push_back(v + 1);
        }
        j["hyperedges"].push_back(std::move(members));
    }
    j["anticommutations"] = ordered_json::array();
    for (const auto &[u, v] : data.anticommutations) {
        j["anticommutations"].push_back({u + 1, v + 1});
    }
    return j.dump(2) + "\n";
}

PauliAssignment parse_assignment(const std::string &text) {
    ordered_json j = parse_root(text);
    if (!j.is_object()) {
        throw ParseError("assignment file must be an object");
    }
    check_version(j);
    uint64_t n = require_count(j, "n");
    if (!j.contains("labels") || !j["labels"].is_object()) {
        throw ParseError("missing \"labels\" object");
    }
    const auto &labels = j["labels"];
    PauliAssignment a;
    a.qubits = (size_t)n;
    a.labels.resize(labels.size());
    std::vector<bool> seen(labels.size(), false);
    for (const auto &[key, value] : labels.items()) {
        uint64_t idx = 0;
        try {
            size_t pos = 0;
            idx = std::stoull(key, &pos);
            if (pos != key.size()) {
                idx = 0;
            }
        } catch (const std::exception &) {
            idx = 0;
        }
        if (idx < 1 || idx > labels.size()) {
            throw ParseError("label keys must be \"1\".." + std::to_string(labels.size()));
        }
        if (!value.is_string()) {
            throw ParseError("labels must be strings");
        }
        PauliObservable p;
        try {
            p = PauliObservable::from_string(value.get<std::string>());
        } catch (const std::invalid_argument &ex) {
            throw ParseError(std::string("label ") + key + ": " + ex.what());
        }
        if (p.qubits() != n) {
            throw ParseError("label " + key + " is not an " + std::to_string(n) +
                             "-qubit word");
        }
        seen[idx - 1] = true;
        a.labels[idx - 1] = std::move(p);
    }
    for (size_t i = 0; i < seen.size(); i++) {
        if (!seen[i]) {
            throw ParseError("missing label for vertex " + std::to_string(i + 1));
        }
    }
    return a;
}

std::string assignment_json(const PauliAssignment &a) {
    ordered_json j;
    j["version"] = 1;
    j["n"] = a.qubits;
    ordered_json labels = ordered_json::object();
    for (size_t i = 0; i < a.labels.size(); i++) {
        labels[std::to_string(i + 1)] = a.labels[i].str();
    }
    j["labels"] = std::move(labels);
    return j.dump(2) + "\n";
}

ClassicalAssignment parse_classical(const std::string &text, size_t vertex_count) {
    ordered_json j = parse_root(text);
    if (!j.is_object()) {
        throw ParseError("value file must be an object");
    }
    check_version(j);
    if (!j.contains("values") || !j["values"].is_object()) {
        throw ParseError("missing \"values\" object");
    }
    ClassicalAssignment a;
    a.values.assign(vertex_count, 0);
    for (const auto &[key, value] : j["values"].items()) {
        uint64_t idx = 0;
        try {
            size_t pos = 0;
            idx = std::stoull(key, &pos);
            if (pos != key.size()) {
                idx = 0;
            }
        } catch (const std::exception &) {
            idx = 0;
        }
        if (idx < 1 || idx > vertex_count) {
            throw ParseError("value keys must be \"1\".." + std::to_string(vertex_count));
        }
        if (!value.is_number_integer() ||
            (value.get<int64_t>() != 1 && value.get<int64_t>() != -1)) {
            throw ParseError("values must be 1 or -1");
        }
        a.values[idx - 1] = (int8_t)value.get<int64_t>();
    }
    for (size_t i = 0; i < vertex_count; i++) {
        if (a.values[i] == 0) {
            throw DomainError(Err::MissingValue,
                              "no value for vertex " + std::to_string(i + 1));
        }
    }
    return a;
}

std::string classical_json(const ClassicalAssignment &a) {
    ordered_json j;
    j["version"] = 1;
    ordered_json values = ordered_json::object();
    for (size_t i = 0; i < a.values.size(); i++) {
        values[std::to_string(i + 1)] = (int)a.values[i];
    }
    j["values"] = std::move(values);
    return j.dump(2) + "\n";
}

SignVector parse_signs(const std::string &text) {
    ordered_json j = parse_root(text);
    const ordered_json *arr = nullptr;
    if (j.is_array()) {
        arr = &j;
    } else if (j.contains("signs") && j["signs"].is_array()) {
        arr = &j["signs"];
    } else {
        throw ParseError("expected a \"signs\" array");
    }
    SignVector s;
    s.signs.reserve(arr->size());
    for (const auto &v : *arr) {
        if (!v.is_number_integer() || (v.get<int64_t>() != 1 && v.get<int64_t>() != -1)) {
            throw ParseError("signs must be 1 or -1");
        }
        s.signs.push_back((int8_t)v.get<int64_t>());
    }
    return s;
}

std::string signs_json(const SignVector &s) {
    ordered_json j;
    j["version"] = 1;
    j["signs"] = ordered_json::array();
    for (int8_t v : s.signs) {
        j["signs"].push_back((int)v);
    }
    return j.dump(2) + "\n";
}

std::string validation_report_json(const ValidationReport &report) {
    ordered_json j;
    j["valid"] = report.ok();
    j["issues"] = ordered_json::array();
    for (const auto &issue : report.issues) {
        j["issues"].push_back({{"code", violation_name(issue.code)}, {"detail", issue.detail}});
    }
    return j.dump(2) + "\n";
}

std::string degree_result_json(const DegreeResult &result) {
    ordered_json j;
    j["degree"] = result.value;
    j["exact"] = result.exact;
    j["method"] = result.method;
    ordered_json values = ordered_json::object();
    for (size_t i = 0; i < result.witness.values.size(); i++) {
        values[std::to_string(i + 1)] = (int)result.witness.values[i];
    }
    j["witness"] = std::move(values);
    return j.dump(2) + "\n";
}

std::string line_configuration_json(const LineConfiguration &lc) {
    HypergramData data = line_configuration_data(lc);
    ordered_json j;
    j["version"] = 1;
    j["n"] = lc.qubits;
    j["vertices"] = data.vertex_count;
    ordered_json points = ordered_json::object();
    for (size_t i = 0; i < lc.points.size(); i++) {
        points[std::to_string(i + 1)] = lc.points[i].str();
    }
    j["points"] = std::move(points);
    j["hyperedges"] = ordered_json::array();
    for (const auto &edge : data.hyperedges) {
        ordered_json members = ordered_json::array();
        for (uint32_t v : edge) {
            members.push_back(v + 1);
        }
        j["hyperedges"].push_back(std::move(members));
    }
    j["anticommutations"] = ordered_json::array();
    for (const auto &[u, v] : data.anticommutations) {
        j["anticommutations"].push_back({u + 1, v + 1});
    }
    j["signs"] = ordered_json::array();
    for (int8_t v : lc.signs.signs) {
        j["signs"].push_back((int)v);
    }
    return j.dump(2) + "\n";
}

std::string assignability_json(const AssignabilityCheck &check, const ValidationReport &report) {
    ordered_json j;
    j["assignable"] = check.assignable;
    j["valid"] = report.ok();
    j["nonzero_entries"] = ordered_json::array();
    for (const auto &[r, c] : check.nonzero_entries) {
        j["nonzero_entries"].push_back({r + 1, c + 1});
    }
    return j.dump(2) + "\n";
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read " + path);
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << text;
    if (!out.flush()) {
        throw std::runtime_error("cannot write " + path);
    }
}

}  // namespace hypergram::io
