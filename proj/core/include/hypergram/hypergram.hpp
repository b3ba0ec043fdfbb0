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

#ifndef HYPERGRAM_HYPERGRAM_HPP
#define HYPERGRAM_HYPERGRAM_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypergram/gf2.hpp"

namespace hypergram {

// Plain (V, H, G) data prior to validation: a vertex count, a list of
// hyperedges (contexts), and a list of anticommutation pairs. Vertices are
// 0-based here; the file formats are 1-based.
struct HypergramData {
    uint32_t vertex_count = 0;
    std::vector<std::vector<uint32_t>> hyperedges;
    std::vector<std::pair<uint32_t, uint32_t>> anticommutations;
    bool operator==(const HypergramData &) const = default;
};

enum class Violation {
    OutOfRange,
    EmptyHyperedge,
    DuplicateHyperedge,
    IsolatedVertex,
    LoopEdge,
    EdgeInsideHyperedge,
    NotReducedZeroRow,
    NotReducedDuplicateRow,
};

const char *violation_name(Violation v);

struct ValidationIssue {
    Violation code;
    std::string detail;  // positions are reported 1-based
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const {
        return issues.empty();
    }
    bool has(Violation code) const;
    size_t count(Violation code) const;
};

// Checks every clause of the definition: hyperedges nonempty, no isolated
// vertex, indices in range, no duplicate hyperedge, anticommutation pairs
// loopless and never inside a common hyperedge, and the anticommutation
// graph reduced (no empty neighborhood, no two equal neighborhoods).
ValidationReport validate(const HypergramData &data);

class InvalidHypergram : public std::runtime_error {
  public:
    explicit InvalidHypergram(ValidationReport report);
    const ValidationReport &report() const {
        return report_;
    }

  private:
    ValidationReport report_;
};

// A validated (V, H, G). Hyperedge members are sorted ascending, pairs are
// stored smaller-index-first and deduplicated; the hyperedge *list* order is
// preserved since sign vectors index into it.
class Hypergram {
  public:
    static Hypergram from_data(HypergramData data);  // throws InvalidHypergram

    size_t vertex_count() const {
        return data_.vertex_count;
    }
    const std::vector<std::vector<uint32_t>> &hyperedges() const {
        return data_.hyperedges;
    }
    const std::vector<std::pair<uint32_t, uint32_t>> &anticommutations() const {
        return data_.anticommutations;
    }
    const HypergramData &data() const {
        return data_;
    }
    bool anticommutes(uint32_t u, uint32_t v) const;

    BitMatrix context_matrix() const;
    BitMatrix anticommutation_matrix() const;
    std::vector<std::pair<uint32_t, uint32_t>> complement_graph() const;
    bool is_assignable() const;
    bool kernel_capacity_ok() const;

    bool operator==(const Hypergram &) const = default;

  private:
    explicit Hypergram(HypergramData data);
    HypergramData data_;
};

// The matrix views also work on raw data (they only need indices in range;
// std::invalid_argument otherwise), so assignability can still be reported
// for structures that fail the reducedness clauses.
BitMatrix context_matrix(const HypergramData &data);
BitMatrix anticommutation_matrix(const HypergramData &data);

// All pairs {i, j} that do not lie inside a common hyperedge.
std::vector<std::pair<uint32_t, uint32_t>> complement_pairs(const HypergramData &data);

struct AssignabilityCheck {
    bool assignable = false;
    // 0-based (row, column) positions of the nonzero entries of C(H)*A(G).
    std::vector<std::pair<uint32_t, uint32_t>> nonzero_entries;
};

// A Pauli assignment exists exactly when the product of the context matrix
// and the anticommutation matrix vanishes.
AssignabilityCheck check_assignability(const HypergramData &data);

// Necessary condition only: |V| <= 2^(|V| - rank C(H)) - 1.
bool kernel_capacity_ok(const HypergramData &data);

}  // namespace hypergram

#endif
