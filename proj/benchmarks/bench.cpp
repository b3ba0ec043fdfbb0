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

#include <vector>

#include <benchmark/benchmark.h>

#include "hypergram/assign.hpp"
#include "hypergram/degree.hpp"
#include "hypergram/geometry.hpp"

namespace {

using namespace hypergram;

// Vertex-wise tensor power of the doily labeling; even powers commute.
std::vector<PauliObservable> doily_tensor_labels(size_t copies) {
    PauliAssignment a = doily().assignment;
    std::vector<PauliObservable> labels = a.labels;
    for (size_t c = 1; c < copies; c++) {
        for (size_t v = 0; v < labels.size(); v++) {
            labels[v] = tensor(labels[v], a.labels[v]);
        }
    }
    return labels;
}

void BM_WnLines(benchmark::State &state) {
    size_t n = (size_t)state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wn_lines(n));
    }
}
BENCHMARK(BM_WnLines)->Arg(2)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_PauliLabelingFromGram(benchmark::State &state) {
    Hypergram hg = Hypergram::from_data(line_configuration_data(wn_lines(3)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pauli_assignment_from_anticommutations(hg));
    }
}
BENCHMARK(BM_PauliLabelingFromGram);

void BM_ClassicalAssignmentTensor(benchmark::State &state) {
    std::vector<PauliObservable> labels = doily_tensor_labels((size_t)state.range(0));
    Hypergram hg = doily().hypergram;
    const auto &contexts = hg.hyperedges();
    for (auto _ : state) {
        benchmark::DoNotOptimize(classical_assignment(labels, contexts));
    }
    state.SetLabel(std::to_string(labels.front().qubits()) + " qubits");
}
BENCHMARK(BM_ClassicalAssignmentTensor)->Arg(2)->Arg(4)->Arg(6);

void BM_DegreeExactDoily(benchmark::State &state) {
    auto [hg, a] = doily();
    SignVector s = sign_function(a, hg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(degree_exact(hg, s));
    }
}
BENCHMARK(BM_DegreeExactDoily);

void BM_DegreeHeuristicL3(benchmark::State &state) {
    LineConfiguration lc = wn_lines(3);
    Hypergram hg = Hypergram::from_data(line_configuration_data(lc));
    HeuristicParams params;
    params.seed = 7;
    unsigned threads = (unsigned)state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(degree_heuristic(hg, lc.signs, params, threads));
    }
}
BENCHMARK(BM_DegreeHeuristicL3)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
