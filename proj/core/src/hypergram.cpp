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

#include "hypergram/hypergram.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hypergram {

const char *violation_name(Violation v) {
    switch (v) {
        case Violation::OutOfRange:
            return "OutOfRange";
        case Violation::EmptyHyperedge:
            return "EmptyHyperedge";
        case Violation::DuplicateHyperedge:
            return "DuplicateHyperedge";
        case Violation::IsolatedVertex:
            return "IsolatedVertex";
        case Violation::LoopEdge:
            return "LoopEdge";
        case Violation::EdgeInsideHyperedge:
            return "EdgeInsideHyperedge";
        case Violation::NotReducedZeroRow:
            return "NotReducedZeroRow";
        case Violation::NotReducedDuplicateRow:
            return "NotReducedDuplicateRow";
    }
    return "Unknown";
}

bool ValidationReport::has(Violation code) const {
    for (const auto &issue : issues) {
        if (issue.code == code) {
            return true;
        }
    }
    return false;
}

size_t ValidationReport::count(Violation code) const {
    size_t n = 0;
    for (const auto &issue : issues) {
        if (issue.code == code) {
            n++;
        }
    }
    return n;
}

namespace {

std::string edge_str(const std::vector<uint32_t> &edge) {
    std::string s = "{";
    for (size_t i = 0; i < edge.size(); i++) {
        if (i) {
            s += ",";
        }
        s += std::to_string(edge[i] + 1);
    }
    return s + "}";
}

std::vector<uint32_t> as_sorted_set(std::vector<uint32_t> edge) {
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    return edge;
}

}  // namespace

ValidationReport validate(const HypergramData &data) {
    ValidationReport report;
    auto add = [&](Violation code, std::string detail) {
        report.issues.push_back(ValidationIssue{code, std::move(detail)});
    };

    const uint32_t n = data.vertex_count;
    if (n == 0) {
        add(Violation::OutOfRange, "vertex count must be positive");
        return report;
    }

    bool ranges_ok = true;
    for (size_t k = 0; k < data.hyperedges.size(); k++) {
        for (uint32_t v : data.hyperedges[k]) {
            if (v >= n) {
                add(Violation::OutOfRange, "hyperedge " + std::to_string(k + 1) +
                                               " references vertex " + std::to_string(v + 1));
                ranges_ok = false;
            }
        }
    }
    for (const auto &[i, j] : data.anticommutations) {
        if (i >= n || j >= n) {
            add(Violation::OutOfRange, "anticommutation pair {" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + "}");
            ranges_ok = false;
        }
    }
    if (!ranges_ok) {
        return report;  // the remaining clauses need in-range indices
    }

    std::vector<std::vector<uint32_t>> edges;
    edges.reserve(data.hyperedges.size());
    for (const auto &e : data.hyperedges) {
        edges.push_back(as_sorted_set(e));
    }

    for (size_t k = 0; k < edges.size(); k++) {
        if (edges[k].empty()) {
            add(Violation::EmptyHyperedge, "hyperedge " + std::to_string(k + 1));
        }
    }
    {
        std::map<std::vector<uint32_t>, size_t> seen;
        for (size_t k = 0; k < edges.size(); k++) {
            auto [it, inserted] = seen.emplace(edges[k], k);
            if (!inserted) {
                add(Violation::DuplicateHyperedge,
                    "hyperedges " + std::to_string(it->second + 1) + " and " +
                        std::to_string(k + 1) + " are both " + edge_str(edges[k]));
            }
        }
    }

    std::vector<bool> covered(n, false);
    for (const auto &e : edges) {
        for (uint32_t v : e) {
            covered[v] = true;
        }
    }
    for (uint32_t v = 0; v < n; v++) {
        if (!covered[v]) {
            add(Violation::IsolatedVertex, "vertex " + std::to_string(v + 1));
        }
    }

    // Pair adjacency induced by the hyperedges, for the containment check.
    BitMatrix within(n, n);
    for (const auto &e : edges) {
        for (size_t a = 0; a < e.size(); a++) {
            for (size_t b = a + 1; b < e.size(); b++) {
                within.set(e[a], e[b], true);
                within.set(e[b], e[a], true);
            }
        }
    }

    std::set<std::pair<uint32_t, uint32_t>> pairs;
    for (const auto &[pi, pj] : data.anticommutations) {
        uint32_t i = std::min(pi, pj);
        uint32_t j = std::max(pi, pj);
        if (i == j) {
            add(Violation::LoopEdge, "pair {" + std::to_string(i + 1) + "," +
                                         std::to_string(j + 1) + "}");
            continue;
        }
        if (!pairs.insert({i, j}).second) {
            continue;  // duplicate listing of the same pair
        }
        if (within.get(i, j)) {
            add(Violation::EdgeInsideHyperedge, "pair {" + std::to_string(i + 1) + "," +
                                                    std::to_string(j + 1) +
                                                    "} lies inside a hyperedge");
        }
    }

    // Reducedness of the anticommutation graph.
    BitMatrix adj(n, n);
    for (const auto &[i, j] : pairs) {
        adj.set(i, j, true);
        adj.set(j, i, true);
    }
    for (uint32_t v = 0; v < n; v++) {
        if (adj.row(v).is_zero()) {
            add(Violation::NotReducedZeroRow,
                "vertex " + std::to_string(v + 1) + " has no anticommutation");
        }
    }
    for (uint32_t i = 0; i < n; i++) {
        for (uint32_t j = i + 1; j < n; j++) {
            if (adj.row(i) == adj.row(j)) {
                add(Violation::NotReducedDuplicateRow,
                    "vertices " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                        " have identical anticommutation neighborhoods");
            }
        }
    }

    return report;
}

InvalidHypergram::InvalidHypergram(ValidationReport report)
    : std::runtime_error([&report] {
          std::string msg = "invalid hypergram:";
          for (const auto &issue : report.issues) {
              msg += " [";
              msg += violation_name(issue.code);
              msg += "] ";
              msg += issue.detail;
              msg += ";";
          }
          return msg;
      }()),
      report_(std::move(report)) {
}

Hypergram::Hypergram(HypergramData data) : data_(std::move(data)) {
}

Hypergram Hypergram::from_data(HypergramData data) {
    // Normalize to set semantics before validating: hyperedge members
    // sorted and unique, pairs smaller-first and deduplicated.
    for (auto &e : data.hyperedges) {
        e = as_sorted_set(std::move(e));
    }
    std::set<std::pair<uint32_t, uint32_t>> pairs;
    for (auto &[i, j] : data.anticommutations) {
        if (i > j) {
            std::swap(i, j);
        }
        pairs.insert({i, j});
    }
    data.anticommutations.assign(pairs.begin(), pairs.end());

    ValidationReport report = validate(data);
    if (!report.ok()) {
        throw InvalidHypergram(std::move(report));
    }
    return Hypergram(std::move(data));
}

bool Hypergram::anticommutes(uint32_t u, uint32_t v) const {
    if (u > v) {
        std::swap(u, v);
    }
    return std::binary_search(data_.anticommutations.begin(), data_.anticommutations.end(),
                              std::make_pair(u, v));
}

BitMatrix Hypergram::context_matrix() const {
    return hypergram::context_matrix(data_);
}

BitMatrix Hypergram::anticommutation_matrix() const {
    return hypergram::anticommutation_matrix(data_);
}

std::vector<std::pair<uint32_t, uint32_t>> Hypergram::complement_graph() const {
    return complement_pairs(data_);
}

bool Hypergram::is_assignable() const {
    return check_assignability(data_).assignable;
}

bool Hypergram::kernel_capacity_ok() const {
    return hypergram::kernel_capacity_ok(data_);
}

namespace {

void require_in_range(const HypergramData &data) {
    for (const auto &e : data.hyperedges) {
        for (uint32_t v : e) {
            if (v >= data.vertex_count) {
                throw std::invalid_argument("vertex index out of range");
            }
        }
    }
    for (const auto &[i, j] : data.anticommutations) {
        if (i >= data.vertex_count || j >= data.vertex_count) {
            throw std::invalid_argument("vertex index out of range");
        }
    }
}

}  // namespace

BitMatrix context_matrix(const HypergramData &data) {
    require_in_range(data);
    BitMatrix m(data.hyperedges.size(), data.vertex_count);
    for (size_t k = 0; k < data.hyperedges.size(); k++) {
        for (uint32_t v : data.hyperedges[k]) {
            m.set(k, v, true);
        }
    }
    return m;
}

BitMatrix anticommutation_matrix(const HypergramData &data) {
    require_in_range(data);
    BitMatrix m(data.vertex_count, data.vertex_count);
    for (const auto &[i, j] : data.anticommutations) {
        if (i != j) {
            m.set(i, j, true);
            m.set(j, i, true);
        }
    }
    return m;
}

std::vector<std::pair<uint32_t, uint32_t>> complement_pairs(const HypergramData &data) {
    require_in_range(data);
    const uint32_t n = data.vertex_count;
    BitMatrix within(n, n);
    for (const auto &e : data.hyperedges) {
        for (size_t a = 0; a < e.size(); a++) {
            for (size_t b = 0; b < e.size(); b++) {
                if (e[a] != e[b]) {
                    within.set(e[a], e[b], true);
                }
            }
        }
    }
    std::vector<std::pair<uint32_t, uint32_t>> out;
    for (uint32_t i = 0; i < n; i++) {
        for (uint32_t j = i + 1; j < n; j++) {
            if (!within.get(i, j)) {
                out.push_back({i, j});
            }
        }
    }
    return out;
}

AssignabilityCheck check_assignability(const HypergramData &data) {
    AssignabilityCheck check;
    BitMatrix product = mat_mul(context_matrix(data), anticommutation_matrix(data));
    for (size_t r = 0; r < product.rows(); r++) {
        for_each_set_bit(product.row(r), [&](size_t c) {
            check.nonzero_entries.push_back({(uint32_t)r, (uint32_t)c});
        });
    }
    check.assignable = check.nonzero_entries.empty();
    return check;
}

bool kernel_capacity_ok(const HypergramData &data) {
    size_t kernel_dim = data.vertex_count - rank(context_matrix(data));
    if (kernel_dim >= 64) {
        return true;  // 2^64 - 1 exceeds any representable vertex count
    }
    return (uint64_t)data.vertex_count <= (uint64_t{1} << kernel_dim) - 1;
}

}  // namespace hypergram
