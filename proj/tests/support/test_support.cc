// Copyright 2026 The Quopath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "test_support.h"

#include <cmath>
#include <numbers>

namespace quopath::testing {

Circuit labeling_example(uint32_t p) {
    return Circuit(
        OddPrime(p),
        3,
        {Gate::phase(0),
         Gate::fourier(1),
         Gate::sum(0, 1),
         Gate::fourier(2),
         Gate::fourier(0),
         Gate::sum(1, 2),
         Gate::fourier(0),
         Gate::fourier(1),
         Gate::fourier(2)});
}

Circuit random_circuit_with_length(std::mt19937_64 &rng, uint32_t p, size_t n, size_t length) {
    std::uniform_int_distribution<uint32_t> reg(0, (uint32_t)n - 1);
    std::uniform_int_distribution<int> kind(0, n >= 2 ? 2 : 1);
    std::vector<Gate> gates;
    gates.reserve(length);
    while (gates.size() < length) {
        switch (kind(rng)) {
            case 0:
                gates.push_back(Gate::fourier(reg(rng)));
                break;
            case 1:
                gates.push_back(Gate::phase(reg(rng)));
                break;
            default: {
                uint32_t c = reg(rng);
                uint32_t t = reg(rng);
                while (t == c) {
                    t = reg(rng);
                }
                gates.push_back(Gate::sum(c, t));
            }
        }
    }
    return Circuit(OddPrime(p), n, std::move(gates));
}

Circuit random_circuit(std::mt19937_64 &rng, uint32_t p, size_t n, size_t max_gates) {
    std::uniform_int_distribution<size_t> count(1, max_gates);
    return random_circuit_with_length(rng, p, n, count(rng));
}

SymmetricMatrix random_symmetric(std::mt19937_64 &rng, uint32_t p, size_t dim) {
    std::uniform_int_distribution<uint32_t> residue(0, p - 1);
    SymmetricMatrix m(OddPrime(p), dim);
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = i; j < dim; j++) {
            m.set(i, j, residue(rng));
        }
    }
    return m;
}

std::vector<uint32_t> random_tuple(std::mt19937_64 &rng, uint32_t p, size_t n) {
    std::uniform_int_distribution<uint32_t> residue(0, p - 1);
    std::vector<uint32_t> t(n);
    for (auto &v : t) {
        v = residue(rng);
    }
    return t;
}

namespace {

int64_t modpow(int64_t base, int64_t exponent, int64_t p) {
    int64_t result = 1;
    base %= p;
    while (exponent > 0) {
        if (exponent & 1) {
            result = result * base % p;
        }
        base = base * base % p;
        exponent >>= 1;
    }
    return result;
}

}  // namespace

size_t gaussian_rank(const FpMatrix &m) {
    const int64_t p = m.modulus().value();
    std::vector<std::vector<int64_t>> rows(m.rows(), std::vector<int64_t>(m.cols()));
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            rows[i][j] = m(i, j);
        }
    }
    size_t rank = 0;
    for (size_t col = 0; col < m.cols() && rank < m.rows(); col++) {
        size_t pivot = rank;
        while (pivot < m.rows() && rows[pivot][col] == 0) {
            pivot++;
        }
        if (pivot == m.rows()) {
            continue;
        }
        std::swap(rows[pivot], rows[rank]);
        // Fermat inverse, so nothing from the library's field code is reused.
        int64_t inv = modpow(rows[rank][col], p - 2, p);
        for (size_t i = 0; i < m.rows(); i++) {
            if (i == rank || rows[i][col] == 0) {
                continue;
            }
            int64_t factor = rows[i][col] * inv % p;
            for (size_t j = 0; j < m.cols(); j++) {
                rows[i][j] = ((rows[i][j] - factor * rows[rank][j]) % p + p) % p;
            }
        }
        rank++;
    }
    return rank;
}

FpMatrix naive_product(const FpMatrix &x, const FpMatrix &y) {
    const uint64_t p = x.modulus().value();
    FpMatrix out(x.modulus(), x.rows(), y.cols());
    for (size_t i = 0; i < x.rows(); i++) {
        for (size_t j = 0; j < y.cols(); j++) {
            uint64_t total = 0;
            for (size_t k = 0; k < x.cols(); k++) {
                total = (total + (uint64_t)x(i, k) * y(k, j)) % p;
            }
            out(i, j) = (uint32_t)total;
        }
    }
    return out;
}

FpMatrix naive_transpose(const FpMatrix &x) {
    FpMatrix out(x.modulus(), x.cols(), x.rows());
    for (size_t i = 0; i < x.rows(); i++) {
        for (size_t j = 0; j < x.cols(); j++) {
            out(j, i) = x(i, j);
        }
    }
    return out;
}

std::complex<double> direct_weil_sum(uint32_t p, uint32_t lambda, uint32_t mu) {
    std::complex<double> total = 0;
    for (uint64_t y = 0; y < p; y++) {
        uint64_t exponent = ((uint64_t)lambda * y % p * y + (uint64_t)mu * y) % p;
        total += std::polar(1.0, 2.0 * std::numbers::pi * (double)exponent / p);
    }
    return total;
}

}  // namespace quopath::testing
