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

#include "hypergram/geometry.hpp"

#include <bit>
#include <stdexcept>

namespace hypergram {

namespace {

constexpr size_t kMaxCountQubits = 15;   // count formulas stay inside uint64
constexpr size_t kMaxEnumerateQubits = 7;

}  // namespace

std::vector<PauliObservable> wn_points(size_t n) {
    if (n < 1 || n > kMaxCountQubits) {
        throw std::invalid_argument("qubit count must be in 1..15");
    }
    size_t count = (size_t{1} << (2 * n)) - 1;
    std::vector<PauliObservable> points;
    points.reserve(count);
    for (size_t key = 1; key <= count; key++) {
        std::vector<uint8_t> codes(n);
        for (size_t j = 0; j < n; j++) {
            codes[j] = (uint8_t)((key >> (2 * (n - 1 - j))) & 3);
        }
        points.push_back(PauliObservable::from_codes(std::move(codes)));
    }
    return points;
}

namespace {

// Symplectic form on packed keys: each 2-bit digit holds (z, x), and the
// form pairs the two bits of every digit, so digit order does not matter.
bool key_form(uint64_t a, uint64_t b) {
    constexpr uint64_t kEven = 0x5555555555555555ull;
    uint64_t swapped = ((b & kEven) << 1) | ((b >> 1) & kEven);
    return std::popcount(a & swapped) & 1;
}

}  // namespace

LineConfiguration wn_lines(size_t n) {
    if (n < 1 || n > kMaxEnumerateQubits) {
        throw std::invalid_argument("line enumeration supports 1..7 qubits");
    }
    LineConfiguration lc;
    lc.qubits = n;
    lc.points = wn_points(n);
    size_t count = lc.points.size();
    // Point k has key k + 1, so the third point of a line through i and j
    // sits at index ((i+1) ^ (j+1)) - 1.
    for (uint32_t i = 0; i < count; i++) {
        for (uint32_t j = i + 1; j < count; j++) {
            if (key_form(i + 1, j + 1)) {
                continue;
            }
            uint32_t k = ((i + 1) ^ (j + 1)) - 1;
            if (k <= j) {
                continue;  // the triple is recorded from its two lowest points
            }
            lc.lines.push_back({i, j, k});
            PhasedPauli prod = multiply(multiply(lc.points[i], lc.points[j]),
                                        PhasedPauli{lc.points[k], 0});
            if (!prod.word.is_identity() || (prod.phase & 1)) {
                throw std::logic_error("line triple does not close to +/- identity");
            }
            lc.signs.signs.push_back(prod.phase == 0 ? (int8_t)1 : (int8_t)-1);
        }
    }
    return lc;
}

HypergramData line_configuration_data(const LineConfiguration &lc) {
    HypergramData data;
    data.vertex_count = (uint32_t)lc.points.size();
    data.hyperedges.reserve(lc.lines.size());
    for (const auto &line : lc.lines) {
        data.hyperedges.push_back({line[0], line[1], line[2]});
    }
    for (uint32_t i = 0; i < lc.points.size(); i++) {
        for (uint32_t j = i + 1; j < lc.points.size(); j++) {
            if (!commutes(lc.points[i], lc.points[j])) {
                data.anticommutations.push_back({i, j});
            }
        }
    }
    return data;
}

uint64_t count_lines(size_t n) {
    if (n < 1 || n > kMaxCountQubits) {
        throw std::invalid_argument("qubit count must be in 1..15");
    }
    uint64_t a = (uint64_t{1} << (n - 1)) - 1;
    uint64_t b = (uint64_t{1} << n) + 1;
    uint64_t c = (uint64_t{1} << n) - 1;
    uint64_t d = (uint64_t{1} << (n - 1)) + 1;
    return a * b * c * d / 3;
}

uint64_t count_negative_lines(size_t n) {
    if (n < 1 || n > kMaxCountQubits) {
        throw std::invalid_argument("qubit count must be in 1..15");
    }
    uint64_t p16 = 1, p10 = 1, p4 = 1;
    for (size_t i = 0; i < n; i++) {
        p16 *= 16;
        p10 *= 10;
        p4 *= 4;
    }
    return (p16 + p4 - 2 * p10) / 24;
}

namespace {

constexpr uint32_t kDoilyEdges[15][3] = {
    {1, 2, 3},  {1, 8, 9},  {1, 10, 11}, {2, 4, 6},   {2, 5, 7},
    {3, 12, 15}, {3, 13, 14}, {4, 8, 12},  {4, 10, 14}, {5, 8, 13},
    {5, 10, 15}, {6, 9, 15},  {6, 11, 13}, {7, 9, 14},  {7, 11, 12},
};

const char *const kDoilyLabels[15] = {
    "IX", "XI", "XX", "IZ", "IY", "XZ", "XY", "ZI", "ZX", "YI", "YX", "ZZ", "ZY", "YZ", "YY",
};

// The ten lines left after removing the spread
// {1,8,9},{2,5,7},{3,12,15},{4,10,14},{6,11,13}.
constexpr uint32_t kTwoSpreadEdges[10][3] = {
    {1, 2, 3},  {1, 10, 11}, {2, 4, 6},  {3, 13, 14}, {4, 8, 12},
    {5, 8, 13}, {5, 10, 15}, {6, 9, 15}, {7, 9, 14},  {7, 11, 12},
};

const char *const kVariantLabels[15] = {
    "IIX", "IXX", "IXI", "XIX", "IIZ", "XXI", "IZZ", "ZXZ",
    "ZZZ", "YYI", "YYX", "YXY", "ZXI", "ZII", "YYZ",
};

constexpr uint32_t kVariantPairs[45][2] = {
    {1, 5},  {1, 7},  {1, 8},  {1, 9},  {1, 12},  {1, 15},  {2, 5},   {2, 8},   {2, 10},
    {2, 11}, {2, 12}, {3, 7},  {3, 9},  {3, 10},  {3, 11},  {3, 15},  {4, 5},   {4, 7},
    {4, 10}, {4, 11}, {4, 13}, {4, 14}, {5, 11},  {5, 12},  {6, 7},   {6, 8},   {6, 12},
    {6, 13}, {6, 14}, {7, 8},  {7, 10}, {7, 13},  {7, 15},  {8, 9},   {8, 11},  {9, 11},
    {9, 12}, {9, 13}, {10, 12}, {10, 14}, {11, 14}, {11, 15}, {12, 13}, {12, 14}, {14, 15},
};

const char *const kTransferFirst[15] = {
    "XYI", "YZZ", "ZXZ", "YYY", "IXY", "IXX", "YYX", "ZXY",
    "YZY", "YZX", "ZXX", "XZI", "ZII", "IXZ", "YYZ",
};

constexpr int8_t kTransferFirstValues[15] = {
    1, -1, -1, -1, 1, -1, -1, 1, -1, 1, -1, -1, 1, -1, 1,
};

const char *const kTransferSecond[15] = {
    "XXIX", "XIZI", "IXZX", "ZIXI", "XZII", "YIYI", "IZZI", "IIXI",
    "XXXX", "YYZX", "ZZZI", "ZIII", "XZXI", "XYYX", "ZXZX",
};

constexpr int8_t kTransferSecondValues[15] = {
    -1, -1, -1, 1, -1, -1, 1, 1, -1, -1, -1, 1, -1, 1, -1,
};

template <size_t N>
std::vector<std::vector<uint32_t>> edges_from_table(const uint32_t (&table)[N][3]) {
    std::vector<std::vector<uint32_t>> edges;
    edges.reserve(N);
    for (const auto &e : table) {
        edges.push_back({e[0] - 1, e[1] - 1, e[2] - 1});
    }
    return edges;
}

PauliAssignment labels_from_table(size_t qubits, const char *const (&table)[15]) {
    PauliAssignment a;
    a.qubits = qubits;
    a.labels.reserve(15);
    for (const char *s : table) {
        a.labels.push_back(PauliObservable::from_string(s));
    }
    return a;
}

HypergramData doily_data() {
    HypergramData data;
    data.vertex_count = 15;
    data.hyperedges = edges_from_table(kDoilyEdges);
    data.anticommutations = complement_pairs(data);
    return data;
}

}  // namespace

LabeledHypergram doily() {
    return {Hypergram::from_data(doily_data()), labels_from_table(2, kDoilyLabels)};
}

LabeledHypergram two_spread() {
    HypergramData data;
    data.vertex_count = 15;
    data.hyperedges = edges_from_table(kTwoSpreadEdges);
    // The anticommutation graph is the complement of the full 15-line
    // doily, not of the 10 retained lines.
    data.anticommutations = complement_pairs(doily_data());
    return {Hypergram::from_data(std::move(data)), labels_from_table(2, kDoilyLabels)};
}

LabeledHypergram two_spread_variant() {
    HypergramData data;
    data.vertex_count = 15;
    data.hyperedges = edges_from_table(kTwoSpreadEdges);
    data.anticommutations.reserve(45);
    for (const auto &p : kVariantPairs) {
        data.anticommutations.push_back({p[0] - 1, p[1] - 1});
    }
    return {Hypergram::from_data(std::move(data)), labels_from_table(3, kVariantLabels)};
}

HypergramData nonassignable_example() {
    HypergramData data;
    data.vertex_count = 5;
    data.hyperedges = {{0, 1, 2}, {0, 3, 4}};
    data.anticommutations = {{2, 4}};
    return data;
}

TransferExample doily_transfer_example() {
    TransferExample ex{labels_from_table(3, kTransferFirst),
                       {},
                       labels_from_table(4, kTransferSecond),
                       {}};
    ex.first_values.values.assign(kTransferFirstValues, kTransferFirstValues + 15);
    ex.second_values.values.assign(kTransferSecondValues, kTransferSecondValues + 15);
    return ex;
}

}  // namespace hypergram
