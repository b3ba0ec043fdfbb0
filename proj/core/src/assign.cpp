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

#include "hypergram/assign.hpp"

#include <map>
#include <stdexcept>

#include "hypergram/errors.hpp"

namespace hypergram {

std::optional<std::pair<size_t, size_t>> find_overdiagonal_one(const BitMatrix &b) {
    for (size_t i = 0; i + 1 < b.cols() && i < b.rows(); i++) {
        const auto &words = b.row(i).words();
        size_t start = i + 1;
        size_t wi = start / 64;
        uint64_t word = words[wi] & ~((uint64_t{1} << (start % 64)) - 1);
        while (true) {
            if (word) {
                return std::make_pair(i, wi * 64 + (size_t)std::countr_zero(word));
            }
            wi++;
            if (wi >= words.size()) {
                break;
            }
            word = words[wi];
        }
    }
    return std::nullopt;
}

namespace {

// Anticommutation parity of two partial words stored as code vectors.
bool codes_anticommute(const std::vector<uint8_t> &a, const std::vector<uint8_t> &b) {
    uint8_t parity = 0;
    for (size_t j = 0; j < a.size(); j++) {
        if (a[j] && b[j] && a[j] != b[j]) {
            parity ^= 1;
        }
    }
    return parity;
}

void check_elimination_step(const BitMatrix &gram, const BitMatrix &b,
                            const std::vector<std::vector<uint8_t>> &codes, size_t iterations,
                            size_t initial_rank) {
    if (!b.is_symmetric() || !b.has_zero_diagonal()) {
        throw std::logic_error("elimination lost symmetry or the zero diagonal");
    }
    if (rank(b) + 2 * iterations != initial_rank) {
        throw std::logic_error("elimination step did not drop the rank by exactly 2");
    }
    size_t nv = b.rows();
    for (size_t l = 0; l < nv; l++) {
        for (size_t m = l + 1; m < nv; m++) {
            bool expected = gram.get(l, m) ^ codes_anticommute(codes[l], codes[m]);
            if (b.get(l, m) != expected) {
                throw std::logic_error("partial labels do not account for the residual matrix");
            }
        }
    }
}

}  // namespace

PauliAssignment labeling_from_gram(const BitMatrix &gram, bool check_invariants) {
    if (gram.rows() != gram.cols()) {
        throw std::invalid_argument("gram matrix must be square");
    }
    if (!gram.is_symmetric() || !gram.has_zero_diagonal()) {
        throw std::invalid_argument("gram matrix must be symmetric with zero diagonal");
    }
    size_t nv = gram.rows();
    BitMatrix b = gram;
    std::vector<std::vector<uint8_t>> codes(nv);
    size_t initial_rank = check_invariants ? rank(b) : 0;
    size_t iterations = 0;

    while (auto pos = find_overdiagonal_one(b)) {
        auto [i, j] = *pos;
        iterations++;
        // The new letter of vertex k is psi^-1(b[k][i], b[k][j]).
        for (size_t k = 0; k < nv; k++) {
            codes[k].push_back((uint8_t)(((uint8_t)b.get(k, i) << 1) | (uint8_t)b.get(k, j)));
        }
        // b += (b e_i)(b e_j)^T + (b e_j)(b e_i)^T, with the columns
        // snapshotted as rows i and j (b is symmetric).
        BitVector ri = b.row(i);
        BitVector rj = b.row(j);
        for (size_t l = 0; l < nv; l++) {
            if (ri.get(l)) {
                b.row(l) ^= rj;
            }
            if (rj.get(l)) {
                b.row(l) ^= ri;
            }
        }
        if (check_invariants) {
            check_elimination_step(gram, b, codes, iterations, initial_rank);
        }
    }

    if (!b.is_zero()) {
        // Unreachable for symmetric zero-diagonal input, whose rank is even.
        throw DomainError(Err::OddRank, "nonzero residual after elimination");
    }

    PauliAssignment out;
    out.qubits = iterations;
    out.labels.reserve(nv);
    for (size_t k = 0; k < nv; k++) {
        out.labels.push_back(PauliObservable::from_codes(std::move(codes[k])));
    }
    return out;
}

PauliAssignment pauli_assignment_from_anticommutations(const Hypergram &hg,
                                                       bool check_invariants) {
    AssignabilityCheck check = check_assignability(hg.data());
    if (!check.assignable) {
        auto [r, c] = check.nonzero_entries.front();
        throw DomainError(Err::NotAssignable,
                          "C(H)*A(G) is nonzero at row " + std::to_string(r + 1) + ", column " +
                              std::to_string(c + 1));
    }
    return labeling_from_gram(hg.anticommutation_matrix(), check_invariants);
}

SignVector sign_function(const PauliAssignment &a, const Hypergram &hg) {
    if (a.labels.size() != hg.vertex_count()) {
        throw DomainError(Err::VertexSetMismatch,
                          "assignment has " + std::to_string(a.labels.size()) + " labels for " +
                              std::to_string(hg.vertex_count()) + " vertices");
    }
    SignVector s;
    s.signs.reserve(hg.hyperedges().size());
    std::vector<PauliObservable> factors;
    for (const auto &edge : hg.hyperedges()) {
        factors.clear();
        for (uint32_t v : edge) {
            factors.push_back(a.labels[v]);
        }
        s.signs.push_back((int8_t)product_sign(factors));
    }
    return s;
}

namespace {

void require_pm1(const std::vector<int8_t> &values) {
    for (int8_t v : values) {
        if (v != 1 && v != -1) {
            throw std::invalid_argument("classical values must be +1 or -1");
        }
    }
}

}  // namespace

SignVector classical_sign_function(const ClassicalAssignment &a, const Hypergram &hg) {
    if (a.values.size() != hg.vertex_count()) {
        throw DomainError(Err::MissingValue,
                          "classical assignment has " + std::to_string(a.values.size()) +
                              " values for " + std::to_string(hg.vertex_count()) + " vertices");
    }
    require_pm1(a.values);
    SignVector s;
    s.signs.reserve(hg.hyperedges().size());
    for (const auto &edge : hg.hyperedges()) {
        int prod = 1;
        for (uint32_t v : edge) {
            prod *= a.values[v];
        }
        s.signs.push_back((int8_t)prod);
    }
    return s;
}

AssignmentCheck check_assignment(const PauliAssignment &a, const Hypergram &hg) {
    size_t nv = hg.vertex_count();
    if (a.labels.size() != nv) {
        return {false, "assignment has " + std::to_string(a.labels.size()) + " labels for " +
                           std::to_string(nv) + " vertices"};
    }
    for (size_t v = 0; v < nv; v++) {
        if (a.labels[v].qubits() != a.qubits) {
            return {false, "label at vertex " + std::to_string(v + 1) + " has width " +
                               std::to_string(a.labels[v].qubits()) + ", expected " +
                               std::to_string(a.qubits)};
        }
        if (a.labels[v].is_identity()) {
            return {false, "vertex " + std::to_string(v + 1) + " is labeled with the identity"};
        }
    }
    {
        std::map<PauliObservable, size_t> seen;
        for (size_t v = 0; v < nv; v++) {
            auto [it, inserted] = seen.emplace(a.labels[v], v);
            if (!inserted) {
                return {false, "vertices " + std::to_string(it->second + 1) + " and " +
                                   std::to_string(v + 1) + " share the label " +
                                   a.labels[v].str()};
            }
        }
    }
    for (size_t u = 0; u < nv; u++) {
        for (size_t v = u + 1; v < nv; v++) {
            bool anti = !commutes(a.labels[u], a.labels[v]);
            if (anti != hg.anticommutes((uint32_t)u, (uint32_t)v)) {
                return {false, "vertices " + std::to_string(u + 1) + " and " +
                                   std::to_string(v + 1) +
                                   (anti ? " anticommute but are not an edge"
                                         : " commute but are an edge")};
            }
        }
    }
    const auto &edges = hg.hyperedges();
    std::vector<PauliObservable> factors;
    for (size_t k = 0; k < edges.size(); k++) {
        factors.clear();
        for (uint32_t v : edges[k]) {
            factors.push_back(a.labels[v]);
        }
        PhasedPauli prod = phased_product(factors);
        if (!prod.word.is_identity() || (prod.phase & 1)) {
            return {false, "hyperedge " + std::to_string(k + 1) +
                               " does not multiply to +/- identity"};
        }
    }
    return {true, ""};
}

bool verify_assignment(const PauliAssignment &a, const Hypergram &hg) {
    return check_assignment(a, hg).ok;
}

namespace {

void require_uniform_width(std::span<const PauliObservable> observables) {
    if (observables.empty()) {
        throw std::invalid_argument("observable list is empty");
    }
    size_t n = observables[0].qubits();
    for (const auto &o : observables) {
        if (o.qubits() != n) {
            throw std::invalid_argument("observables act on different qubit counts");
        }
    }
}

void require_pairwise_commuting(std::span<const PauliObservable> observables) {
    std::vector<BitVector> enc;
    enc.reserve(observables.size());
    for (const auto &o : observables) {
        enc.push_back(encode(o));
    }
    for (size_t i = 0; i < enc.size(); i++) {
        for (size_t j = i + 1; j < enc.size(); j++) {
            if (symplectic_form(enc[i], enc[j])) {
                throw DomainError(Err::NonCommutingInput,
                                  "observables " + std::to_string(i + 1) + " and " +
                                      std::to_string(j + 1) + " anticommute");
            }
        }
    }
}

}  // namespace

std::vector<size_t> basis(std::span<const PauliObservable> observables) {
    require_uniform_width(observables);
    require_pairwise_commuting(observables);
    size_t n = observables[0].qubits();
    BitMatrix enc(2 * n, observables.size());
    for (size_t j = 0; j < observables.size(); j++) {
        for_each_set_bit(encode(observables[j]), [&](size_t i) { enc.set(i, j, true); });
    }
    return column_basis(enc);
}

ClassicalAssignment classical_assignment(std::span<const PauliObservable> observables,
                                         const std::vector<std::vector<uint32_t>> &contexts) {
    require_uniform_width(observables);
    require_pairwise_commuting(observables);

    std::vector<PauliObservable> factors;
    for (size_t k = 0; k < contexts.size(); k++) {
        if (contexts[k].empty()) {
            throw DomainError(Err::InvalidContext, "context " + std::to_string(k + 1) +
                                                       " is empty");
        }
        factors.clear();
        for (uint32_t idx : contexts[k]) {
            if (idx >= observables.size()) {
                throw std::invalid_argument("context index out of range");
            }
            factors.push_back(observables[idx]);
        }
        PhasedPauli prod = phased_product(factors);
        if (!prod.word.is_identity() || (prod.phase & 1)) {
            throw DomainError(Err::InvalidContext,
                              "context " + std::to_string(k + 1) +
                                  " does not multiply to +/- identity");
        }
    }

    std::vector<size_t> basis_idx = basis(observables);
    std::vector<BitVector> basis_enc;
    basis_enc.reserve(basis_idx.size());
    for (size_t idx : basis_idx) {
        basis_enc.push_back(encode(observables[idx]));
    }

    // value(t) relates t to the product of its basis decomposition; every
    // context constraint follows because the per-context basis occurrences
    // cancel in pairs.
    ClassicalAssignment out;
    out.values.resize(observables.size());
    for (size_t t = 0; t < observables.size(); t++) {
        auto coeffs = solve_in_span(basis_enc, encode(observables[t]));
        if (!coeffs) {
            throw std::logic_error("observable escaped the span of its own basis");
        }
        PhasedPauli prod{PauliObservable(observables[t].qubits()), 0};
        for_each_set_bit(*coeffs, [&](size_t ci) {
            prod = multiply(prod, PhasedPauli{observables[basis_idx[ci]], 0});
        });
        if (prod.word != observables[t] || (prod.phase & 1)) {
            throw std::logic_error("basis recombination does not reproduce the observable");
        }
        out.values[t] = prod.phase == 0 ? 1 : -1;
    }
    return out;
}

CommutativeLabeling tensor_assignment(const PauliAssignment &a1, const PauliAssignment &a2) {
    if (a1.labels.size() != a2.labels.size()) {
        throw DomainError(Err::VertexSetMismatch,
                          "assignments label " + std::to_string(a1.labels.size()) + " and " +
                              std::to_string(a2.labels.size()) + " vertices");
    }
    CommutativeLabeling out;
    out.qubits = a1.qubits + a2.qubits;
    out.labels.reserve(a1.labels.size());
    for (size_t v = 0; v < a1.labels.size(); v++) {
        out.labels.push_back(tensor(a1.labels[v], a2.labels[v]));
    }
    return out;
}

ClassicalAssignment transfer_classical(const PauliAssignment &a1, const PauliAssignment &a2,
                                       const ClassicalAssignment &values1, const Hypergram &hg) {
    if (a1.labels.size() != hg.vertex_count() || a2.labels.size() != hg.vertex_count()) {
        throw DomainError(Err::VertexSetMismatch,
                          "assignments must label the hypergram's vertex set");
    }
    AssignmentCheck c1 = check_assignment(a1, hg);
    if (!c1.ok) {
        throw std::invalid_argument("first assignment is not valid: " + c1.detail);
    }
    AssignmentCheck c2 = check_assignment(a2, hg);
    if (!c2.ok) {
        throw std::invalid_argument("second assignment is not valid: " + c2.detail);
    }
    if (values1.values.size() != hg.vertex_count()) {
        throw DomainError(Err::MissingValue, "classical values do not cover the vertex set");
    }
    require_pm1(values1.values);

    CommutativeLabeling tensored = tensor_assignment(a1, a2);
    ClassicalAssignment mediator = classical_assignment(tensored.labels, hg.hyperedges());

    ClassicalAssignment out;
    out.values.resize(hg.vertex_count());
    for (size_t v = 0; v < out.values.size(); v++) {
        out.values[v] = (int8_t)(values1.values[v] * mediator.values[v]);
    }
    return out;
}

std::vector<size_t> unsatisfied_set(const PauliAssignment &a, const ClassicalAssignment &c,
                                    const Hypergram &hg) {
    SignVector want = sign_function(a, hg);
    SignVector got = classical_sign_function(c, hg);
    std::vector<size_t> out;
    for (size_t k = 0; k < want.signs.size(); k++) {
        if (want.signs[k] != got.signs[k]) {
            out.push_back(k);
        }
    }
    return out;
}

std::pair<Hypergram, PauliAssignment> hypergram_from_configuration(
    std::span<const PauliObservable> observables,
    const std::vector<std::vector<uint32_t>> &contexts) {
    require_uniform_width(observables);
    for (size_t v = 0; v < observables.size(); v++) {
        if (observables[v].is_identity()) {
            throw DomainError(Err::IdentityObservable,
                              "observable " + std::to_string(v + 1) + " is the identity");
        }
    }
    {
        std::map<PauliObservable, size_t> seen;
        for (size_t v = 0; v < observables.size(); v++) {
            auto [it, inserted] = seen.emplace(observables[v], v);
            if (!inserted) {
                throw DomainError(Err::DuplicateObservable,
                                  "observables " + std::to_string(it->second + 1) + " and " +
                                      std::to_string(v + 1) + " are both " +
                                      observables[v].str());
            }
        }
    }

    std::vector<PauliObservable> factors;
    for (const auto &ctx : contexts) {
        factors.clear();
        for (uint32_t idx : ctx) {
            if (idx >= observables.size()) {
                throw std::invalid_argument("context index out of range");
            }
            factors.push_back(observables[idx]);
        }
        product_sign(factors);  // must be a commuting +/- identity context
    }

    HypergramData data;
    data.vertex_count = (uint32_t)observables.size();
    data.hyperedges = contexts;
    for (uint32_t i = 0; i < observables.size(); i++) {
        for (uint32_t j = i + 1; j < observables.size(); j++) {
            if (!commutes(observables[i], observables[j])) {
                data.anticommutations.push_back({i, j});
            }
        }
    }

    Hypergram hg = Hypergram::from_data(std::move(data));
    PauliAssignment a;
    a.qubits = observables[0].qubits();
    a.labels.assign(observables.begin(), observables.end());
    return {std::move(hg), std::move(a)};
}

}  // namespace hypergram
