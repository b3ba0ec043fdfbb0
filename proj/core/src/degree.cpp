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

#include "hypergram/degree.hpp"

#include <atomic>
#include <bit>
#include <random>
#include <stdexcept>
#include <thread>

#include "hypergram/assign.hpp"
#include "hypergram/errors.hpp"

namespace hypergram {

BitVector negativity_vector(const SignVector &s) {
    BitVector e(s.signs.size());
    for (size_t k = 0; k < s.signs.size(); k++) {
        if (s.signs[k] == -1) {
            e.set(k, true);
        } else if (s.signs[k] != 1) {
            throw std::invalid_argument("signs must be +1 or -1");
        }
    }
    return e;
}

namespace {

void require_matching_signs(const Hypergram &hg, const SignVector &s) {
    if (s.signs.size() != hg.hyperedges().size()) {
        throw DomainError(Err::VertexSetMismatch,
                          std::to_string(s.signs.size()) + " signs for " +
                              std::to_string(hg.hyperedges().size()) + " hyperedges");
    }
}

size_t weight(const std::vector<uint64_t> &words) {
    size_t total = 0;
    for (uint64_t w : words) {
        total += (size_t)std::popcount(w);
    }
    return total;
}

void xor_into(std::vector<uint64_t> &dst, const std::vector<uint64_t> &src) {
    for (size_t i = 0; i < dst.size(); i++) {
        dst[i] ^= src[i];
    }
}

size_t weight_after_xor(const std::vector<uint64_t> &a, const std::vector<uint64_t> &b) {
    size_t total = 0;
    for (size_t i = 0; i < a.size(); i++) {
        total += (size_t)std::popcount(a[i] ^ b[i]);
    }
    return total;
}

// Gray-code walk over every XOR combination of `cols`, tracking the minimum
// Hamming distance to `target`. Returns (weight, combination bitmask).
std::pair<uint64_t, uint64_t> min_distance_walk(const std::vector<std::vector<uint64_t>> &cols,
                                                const std::vector<uint64_t> &target) {
    std::vector<uint64_t> residual = target;
    uint64_t best = weight(residual);
    uint64_t best_mask = 0;
    uint64_t total = uint64_t{1} << cols.size();
    for (uint64_t g = 1; g < total && best > 0; g++) {
        xor_into(residual, cols[(size_t)std::countr_zero(g)]);
        uint64_t w = weight(residual);
        if (w < best) {
            best = w;
            best_mask = g ^ (g >> 1);
        }
    }
    return {best, best_mask};
}

uint64_t verified_distance(const Hypergram &hg, const SignVector &s,
                           const ClassicalAssignment &witness) {
    SignVector got = classical_sign_function(witness, hg);
    uint64_t dist = 0;
    for (size_t k = 0; k < s.signs.size(); k++) {
        if (s.signs[k] != got.signs[k]) {
            dist++;
        }
    }
    return dist;
}

ClassicalAssignment witness_from_flips(size_t vertex_count, const std::vector<size_t> &vertices,
                                       uint64_t mask) {
    ClassicalAssignment w;
    w.values.assign(vertex_count, 1);
    for (size_t j = 0; j < vertices.size(); j++) {
        if ((mask >> j) & 1) {
            w.values[vertices[j]] = -1;
        }
    }
    return w;
}

DegreeResult finish_exact(const Hypergram &hg, const SignVector &s, uint64_t value,
                          ClassicalAssignment witness, const char *method) {
    if (verified_distance(hg, s, witness) != value) {
        throw std::logic_error("witness does not achieve the reported degree");
    }
    DegreeResult out;
    out.value = value;
    out.exact = true;
    out.witness = std::move(witness);
    out.method = method;
    return out;
}

}  // namespace

DegreeResult degree_exact(const Hypergram &hg, const SignVector &s, unsigned rank_threshold) {
    require_matching_signs(hg, s);
    BitMatrix c = hg.context_matrix();
    std::vector<size_t> basis_cols = column_basis(c);
    if (basis_cols.size() > rank_threshold) {
        throw DomainError(Err::ThresholdExceeded,
                          "context matrix rank " + std::to_string(basis_cols.size()) +
                              " exceeds the threshold " + std::to_string(rank_threshold));
    }
    std::vector<std::vector<uint64_t>> cols;
    cols.reserve(basis_cols.size());
    for (size_t idx : basis_cols) {
        cols.push_back(c.column(idx).words());
    }
    auto [value, mask] = min_distance_walk(cols, negativity_vector(s).words());
    return finish_exact(hg, s, value,
                        witness_from_flips(hg.vertex_count(), basis_cols, mask), "exhaustive");
}

DegreeResult degree_bruteforce(const Hypergram &hg, const SignVector &s) {
    require_matching_signs(hg, s);
    if (hg.vertex_count() > kBruteForceLimit) {
        throw DomainError(Err::TooLarge, std::to_string(hg.vertex_count()) +
                                             " vertices exceed the brute-force limit of " +
                                             std::to_string(kBruteForceLimit));
    }
    BitMatrix c = hg.context_matrix();
    std::vector<std::vector<uint64_t>> cols;
    std::vector<size_t> vertices;
    cols.reserve(hg.vertex_count());
    for (size_t v = 0; v < hg.vertex_count(); v++) {
        cols.push_back(c.column(v).words());
        vertices.push_back(v);
    }
    auto [value, mask] = min_distance_walk(cols, negativity_vector(s).words());
    return finish_exact(hg, s, value, witness_from_flips(hg.vertex_count(), vertices, mask),
                        "bruteforce");
}

namespace {

uint64_t mix_seed(uint64_t seed, uint64_t salt) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

struct RestartOutcome {
    uint64_t value = UINT64_MAX;
    std::vector<uint8_t> flips;
};

}  // namespace

DegreeResult degree_heuristic(const Hypergram &hg, const SignVector &s,
                              const HeuristicParams &params, unsigned threads) {
    require_matching_signs(hg, s);
    if (params.restarts == 0) {
        throw std::invalid_argument("at least one restart is required");
    }
    const size_t nv = hg.vertex_count();
    BitMatrix c = hg.context_matrix();
    std::vector<std::vector<uint64_t>> cols;
    cols.reserve(nv);
    for (size_t v = 0; v < nv; v++) {
        cols.push_back(c.column(v).words());
    }
    const std::vector<uint64_t> target = negativity_vector(s).words();

    std::vector<RestartOutcome> outcomes(params.restarts);

    auto run_restart = [&](uint32_t restart) {
        std::mt19937_64 rng(mix_seed(params.seed, restart));
        std::vector<uint8_t> flips(nv, 0);
        std::vector<uint64_t> residual = target;
        if (restart != 0) {
            // Restart 0 keeps the coset representative itself as the start.
            for (size_t v = 0; v < nv; v++) {
                if (rng() & 1) {
                    flips[v] = 1;
                    xor_into(residual, cols[v]);
                }
            }
        }
        uint64_t best = weight(residual);
        std::vector<uint8_t> best_flips = flips;
        std::vector<uint64_t> tabu_until(nv, 0);
        std::vector<size_t> ties;

        for (uint64_t step = 1; step <= params.max_flips && best > 0; step++) {
            uint64_t best_cand = UINT64_MAX;
            ties.clear();
            for (size_t v = 0; v < nv; v++) {
                uint64_t w = weight_after_xor(residual, cols[v]);
                // Tabu moves stay blocked unless they beat the restart best.
                if (tabu_until[v] >= step && w >= best) {
                    continue;
                }
                if (w < best_cand) {
                    best_cand = w;
                    ties.clear();
                    ties.push_back(v);
                } else if (w == best_cand) {
                    ties.push_back(v);
                }
            }
            if (ties.empty()) {
                break;  // every vertex tabu; nothing sensible left to do
            }
            size_t v = ties[(size_t)(rng() % ties.size())];
            flips[v] ^= 1;
            xor_into(residual, cols[v]);
            tabu_until[v] = step + params.tabu_tenure;
            if (best_cand < best) {
                best = best_cand;
                best_flips = flips;
            }
        }
        outcomes[restart] = RestartOutcome{best, std::move(best_flips)};
    };

    if (threads <= 1) {
        for (uint32_t r = 0; r < params.restarts; r++) {
            run_restart(r);
        }
    } else {
        std::atomic<uint32_t> next{0};
        std::vector<std::thread> pool;
        unsigned workers = threads < params.restarts ? threads : params.restarts;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; t++) {
            pool.emplace_back([&] {
                for (uint32_t r; (r = next.fetch_add(1)) < params.restarts;) {
                    run_restart(r);
                }
            });
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    // Deterministic merge: best value, ties to the lowest restart index.
    size_t pick = 0;
    for (size_t r = 1; r < outcomes.size(); r++) {
        if (outcomes[r].value < outcomes[pick].value) {
            pick = r;
        }
    }

    ClassicalAssignment witness;
    witness.values.resize(nv);
    for (size_t v = 0; v < nv; v++) {
        witness.values[v] = outcomes[pick].flips[v] ? -1 : 1;
    }
    uint64_t value = outcomes[pick].value;
    if (verified_distance(hg, s, witness) != value) {
        throw std::logic_error("witness does not achieve the reported upper bound");
    }

    DegreeResult out;
    out.value = value;
    out.exact = value == 0;
    out.witness = std::move(witness);
    out.method = "heuristic";
    return out;
}

int64_t noncontextual_bound(size_t context_count, uint64_t degree) {
    if (degree > context_count) {
        throw std::invalid_argument("degree exceeds the context count");
    }
    return (int64_t)context_count - 2 * (int64_t)degree;
}

bool is_contextual(const Hypergram &hg, const SignVector &s, unsigned rank_threshold) {
    return degree_exact(hg, s, rank_threshold).value > 0;
}

}  // namespace hypergram
