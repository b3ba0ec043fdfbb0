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

#ifndef HYPERGRAM_IO_HPP
#define HYPERGRAM_IO_HPP

#include <stdexcept>
#include <string>

#include "hypergram/assignment.hpp"
#include "hypergram/degree.hpp"
#include "hypergram/geometry.hpp"
#include "hypergram/hypergram.hpp"

namespace hypergram::io {

// Malformed input: bad JSON, wrong types, schema violations. Structural
// domain violations (an index out of range, say) throw InvalidHypergram or
// DomainError instead so callers can distinguish usage errors from invalid
// data.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// {"version":1,"vertices":N,"hyperedges":[[...]],"anticommutations":[[i,j],...]}
// with 1-based vertex indices. Hyperedge members are normalized to sorted
// sets and pairs to smaller-index-first; out-of-range indices raise
// InvalidHypergram with OutOfRange issues, everything else (loops, duplicate
// hyperedges, ...) is left for validate() to report.
HypergramData parse_hypergram(const std::string &text);
std::string hypergram_json(const HypergramData &data);

// {"version":1,"n":N,"labels":{"1":"IX",...}} with labels for every vertex.
PauliAssignment parse_assignment(const std::string &text);
std::string assignment_json(const PauliAssignment &a);

// {"version":1,"values":{"1":1,"2":-1,...}}; must cover 1..vertex_count
// exactly (DomainError MissingValue otherwise).
ClassicalAssignment parse_classical(const std::string &text, size_t vertex_count);
std::string classical_json(const ClassicalAssignment &a);

// Any object carrying a "signs" array of +/-1 (or a bare array), so a stored
// line configuration works directly as a sign file.
SignVector parse_signs(const std::string &text);
std::string signs_json(const SignVector &s);

std::string validation_report_json(const ValidationReport &report);
std::string degree_result_json(const DegreeResult &result);
// Hypergram fields plus "points" and "signs".
std::string line_configuration_json(const LineConfiguration &lc);
std::string assignability_json(const AssignabilityCheck &check, const ValidationReport &report);

std::string read_file(const std::string &path);  // throws std::runtime_error
void write_file(const std::string &path, const std::string &text);

}  // namespace hypergram::io

#endif
