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

#include "support/matrix_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace hypergram::testing {

namespace {

using C = std::complex<double>;

CMatrix letter_matrix(Letter l) {
    const C i{0.0, 1.0};
    switch (l) {
        case Letter::I:
            return {{1, 0}, {0, 1}};
        case Letter::X:
            return {{0, 1}, {1, 0}};
        case Letter::Y:
            return {{0, -i}, {i, 0}};
        case Letter::Z:
            return {{1, 0}, {0, -1}};
    }
    throw std::invalid_argument("bad letter");
}

}  // namespace

CMatrix identity_matrix(size_t dim) {
    CMatrix m(dim, std::vector<C>(dim, C{0}));
    for (size_t r = 0; r < dim; r++) {
        m[r][r] = C{1};
    }
    return m;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    size_t ar = a.size(), ac = a[0].size();
    size_t br = b.size(), bc = b[0].size();
    CMatrix m(ar * br, std::vector<C>(ac * bc, C{0}));
    for (size_t i = 0; i < ar; i++) {
        for (size_t j = 0; j < ac; j++) {
            for (size_t k = 0; k < br; k++) {
                for (size_t l = 0; l < bc; l++) {
                    m[i * br + k][j * bc + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    return m;
}

CMatrix pauli_matrix(const PauliObservable &p) {
    if (p.qubits() == 0) {
        return {{C{1}}};
    }
    CMatrix m = letter_matrix(p.letter(0));
    for (size_t j = 1; j < p.qubits(); j++) {
        m = kron(m, letter_matrix(p.letter(j)));
    }
    return m;
}

CMatrix cmat_mul(const CMatrix &a, const CMatrix &b) {
    size_t n = a.size(), k = b.size(), m = b[0].size();
    if (a[0].size() != k) {
        throw std::invalid_argument("dimension mismatch");
    }
    CMatrix out(n, std::vector<C>(m, C{0}));
    for (size_t i = 0; i < n; i++) {
        for (size_t l = 0; l < k; l++) {
            for (size_t j = 0; j < m; j++) {
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    return out;
}

CMatrix scaled(CMatrix m, C s) {
    for (auto &row : m) {
        for (auto &v : row) {
            v *= s;
        }
    }
    return m;
}

bool approx_equal(const CMatrix &a, const CMatrix &b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    for (size_t r = 0; r < a.size(); r++) {
        if (a[r].size() != b[r].size()) {
            return false;
        }
        for (size_t c = 0; c < a[r].size(); c++) {
            if (std::abs(a[r][c] - b[r][c]) > tol) {
                return false;
            }
        }
    }
    return true;
}

std::complex<double> i_power(unsigned k) {
    switch (k % 4) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

}  // namespace hypergram::testing
