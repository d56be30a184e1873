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

#include "quopath/oracle.h"

#include <cmath>
#include <numbers>

namespace quopath {

namespace {

std::vector<std::complex<double>> roots_of_unity(uint32_t p) {
    std::vector<std::complex<double>> roots(p);
    for (uint32_t k = 0; k < p; k++) {
        roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / p);
    }
    return roots;
}

uint64_t checked_power(uint64_t base, size_t exponent, uint64_t cap, const char *what) {
    uint64_t value = 1;
    for (size_t i = 0; i < exponent; i++) {
        value *= base;
        if (value > cap) {
            throw CapExceeded(std::string(what) + " exceeds the cap of " + std::to_string(cap));
        }
    }
    return value;
}

/// Histogram over x in F_p^alpha of the joint values (S_0(x), ..., S_{K-1}(x))
/// packed as sum_k S_k(x) p^k. Depth-first over x_0, x_1, ...; at depth d each
/// form carries its partial value and the linear coefficients of x_d..x_{alpha-1}.
std::vector<uint64_t> joint_value_histogram(const std::vector<const QuadraticForm *> &forms) {
    const uint32_t p = forms[0]->modulus().value();
    const size_t alpha = forms[0]->alpha();
    const size_t K = forms.size();
    uint64_t buckets = 1;
    for (size_t k = 0; k < K; k++) {
        buckets *= p;
    }
    std::vector<uint64_t> histogram(buckets, 0);

    // linear[d][k * alpha + j]: coefficient of x_j in form k after fixing x_0..x_{d-1}.
    std::vector<std::vector<uint32_t>> linear(alpha + 1, std::vector<uint32_t>(K * alpha, 0));
    std::vector<std::vector<uint32_t>> value(alpha + 1, std::vector<uint32_t>(K, 0));
    for (size_t k = 0; k < K; k++) {
        value[0][k] = forms[k]->zeta;
        for (size_t j = 0; j < alpha; j++) {
            linear[0][k * alpha + j] = forms[k]->eta[j];
        }
    }

    auto record = [&](const std::vector<uint32_t> &v) {
        uint64_t key = 0;
        for (size_t k = K; k-- > 0;) {
            key = key * p + v[k];
        }
        histogram[key]++;
    };
    if (alpha == 0) {
        record(value[0]);
        return histogram;
    }

    std::vector<uint32_t> digit(alpha, 0);
    size_t d = 0;
    while (true) {
        // Descend with x_d = digit[d].
        uint32_t t = digit[d];
        for (size_t k = 0; k < K; k++) {
            const QuadraticForm &f = *forms[k];
            uint64_t v = value[d][k];
            v += (uint64_t)f.theta(d, d) * t % p * t;
            v += (uint64_t)linear[d][k * alpha + d] * t;
            value[d + 1][k] = (uint32_t)(v % p);
            for (size_t j = d + 1; j < alpha; j++) {
                linear[d + 1][k * alpha + j] =
                    (uint32_t)((linear[d][k * alpha + j] + 2 * (uint64_t)f.theta(d, j) * t) % p);
            }
        }
        if (d + 1 == alpha) {
            record(value[alpha]);
            // Advance the odometer.
            while (true) {
                digit[d]++;
                if (digit[d] < p) {
                    break;
                }
                digit[d] = 0;
                if (d == 0) {
                    return histogram;
                }
                d--;
            }
        } else {
            d++;
        }
    }
}

}  // namespace

DenseState::DenseState(OddPrime modulus, size_t num_registers, std::span<const uint32_t> a, uint64_t cap)
    : modulus_(modulus), num_registers_(num_registers), strides_(num_registers), roots_(roots_of_unity(modulus.value())) {
    const uint32_t p = modulus.value();
    uint64_t dim = checked_power(p, num_registers, cap, "dense state dimension p^n");
    if (a.size() != num_registers) {
        throw std::invalid_argument("input tuple has the wrong length");
    }
    uint64_t stride = 1;
    for (size_t r = num_registers; r-- > 0;) {
        strides_[r] = stride;
        stride *= p;
    }
    uint64_t index = 0;
    for (size_t r = 0; r < num_registers; r++) {
        if (a[r] >= p) {
            throw std::invalid_argument("input entry is not a residue mod p");
        }
        index += a[r] * strides_[r];
    }
    amplitudes_.assign(dim, 0.0);
    amplitudes_[index] = 1.0;
}

void DenseState::apply(const Gate &gate) {
    const uint32_t p = modulus_.value();
    const uint64_t dim = amplitudes_.size();
    const uint64_t stride = strides_[gate.target];
    auto digit = [&](uint64_t index, uint64_t s) { return (uint32_t)(index / s % p); };

    switch (gate.kind) {
        case GateKind::Fourier: {
            const double scale = 1.0 / std::sqrt((double)p);
            std::vector<std::complex<double>> column(p);
            for (uint64_t base = 0; base < dim; base++) {
                if (digit(base, stride) != 0) {
                    continue;
                }
                for (uint32_t t = 0; t < p; t++) {
                    column[t] = amplitudes_[base + t * stride];
                }
                for (uint32_t s = 0; s < p; s++) {
                    std::complex<double> total = 0;
                    for (uint32_t t = 0; t < p; t++) {
                        total += roots_[(uint64_t)s * t % p] * column[t];
                    }
                    amplitudes_[base + s * stride] = total * scale;
                }
            }
            break;
        }
        case GateKind::Phase: {
            const uint32_t half = modulus_.half();
            for (uint64_t index = 0; index < dim; index++) {
                uint64_t t = digit(index, stride);
                uint64_t exponent = t * ((t + p - 1) % p) % p * half % p;
                amplitudes_[index] *= roots_[exponent];
            }
            break;
        }
        case GateKind::Sum: {
            const uint64_t control_stride = strides_[gate.control];
            std::vector<std::complex<double>> next(dim, 0.0);
            for (uint64_t index = 0; index < dim; index++) {
                uint32_t s = digit(index, control_stride);
                uint32_t t = digit(index, stride);
                uint64_t dest = index - t * stride + (uint64_t)((s + t) % p) * stride;
                next[dest] = amplitudes_[index];
            }
            amplitudes_ = std::move(next);
            break;
        }
    }
}

void DenseState::apply(const Circuit &circuit) {
    for (const auto &g : circuit.gates()) {
        apply(g);
    }
}

std::complex<double> DenseState::amplitude(std::span<const uint32_t> b) const {
    if (b.size() != num_registers_) {
        throw std::invalid_argument("outcome tuple has the wrong length");
    }
    uint64_t index = 0;
    for (size_t r = 0; r < num_registers_; r++) {
        if (b[r] >= modulus_.value()) {
            throw std::invalid_argument("outcome entry is not a residue mod p");
        }
        index += b[r] * strides_[r];
    }
    return amplitudes_[index];
}

double DenseState::norm() const {
    double total = 0;
    for (const auto &z : amplitudes_) {
        total += std::norm(z);
    }
    return std::sqrt(total);
}

std::vector<std::complex<double>> dense_output_amplitudes(const Circuit &circuit, std::span<const uint32_t> a) {
    DenseState state(circuit.modulus(), circuit.num_registers(), a);
    state.apply(circuit);
    return state.amplitudes();
}

std::complex<double> dense_amplitude(const Circuit &circuit, std::span<const uint32_t> a, std::span<const uint32_t> b) {
    DenseState state(circuit.modulus(), circuit.num_registers(), a);
    state.apply(circuit);
    return state.amplitude(b);
}

std::complex<double> brute_force_path_sum(const QuadraticForm &form, size_t num_registers, uint64_t cap) {
    const uint32_t p = form.modulus().value();
    checked_power(p, form.alpha(), cap, "path-sum enumeration p^alpha");
    auto roots = roots_of_unity(p);
    auto histogram = joint_value_histogram({&form});
    std::complex<double> total = 0;
    for (uint32_t v = 0; v < p; v++) {
        total += (double)histogram[v] * roots[v];
    }
    return total * std::pow((double)p, -((double)num_registers + (double)form.alpha()) / 2.0);
}

std::vector<std::complex<double>> brute_force_output_amplitudes(
    const Circuit &circuit, std::span<const uint32_t> a, uint64_t cap) {
    const Circuit standard = normalize_to_standard_form(circuit);
    const OddPrime modulus = standard.modulus();
    const uint32_t p = modulus.value();
    const size_t n = standard.num_registers();
    const uint64_t outcomes = checked_power(p, n, kDenseStateCap, "outcome count p^n");

    std::vector<uint32_t> b(n, 0);
    std::vector<QuadraticForm> forms;
    forms.push_back(extract_phase_polynomial(label_circuit(standard, a, b)));
    checked_power(p, forms[0].alpha(), cap, "path-sum enumeration p^alpha");
    for (size_t r = 0; r < n; r++) {
        b[r] = 1;
        QuadraticForm unit = extract_phase_polynomial(label_circuit(standard, a, b));
        b[r] = 0;
        // d_r = S_{a,e_r} - S_{a,0}
        QuadraticForm diff{SymmetricMatrix(modulus, unit.alpha()), unit.eta, zp::sub(unit.zeta, forms[0].zeta, p)};
        for (size_t i = 0; i < unit.alpha(); i++) {
            diff.eta[i] = zp::sub(unit.eta[i], forms[0].eta[i], p);
            for (size_t j = i; j < unit.alpha(); j++) {
                diff.theta.set(i, j, zp::sub(unit.theta(i, j), forms[0].theta(i, j), p));
            }
        }
        forms.push_back(std::move(diff));
    }
    std::vector<const QuadraticForm *> pointers;
    for (const auto &f : forms) {
        pointers.push_back(&f);
    }
    auto histogram = joint_value_histogram(pointers);
    auto roots = roots_of_unity(p);
    const double scale = std::pow((double)p, -((double)n + (double)forms[0].alpha()) / 2.0);

    // Fold the S_{a,0} digit: G[v] = sum_{v0} hist[v0 + p v] chi(v0), with v the
    // packed (d_1, ..., d_n) values, d_1 least significant.
    std::vector<std::complex<double>> g(outcomes, 0.0);
    for (uint64_t key = 0; key < histogram.size(); key++) {
        if (histogram[key] != 0) {
            g[key / p] += (double)histogram[key] * roots[key % p];
        }
    }
    // amplitude(b) = sum_v G[v] chi(b . v): one length-p transform per register.
    uint64_t stride = 1;
    std::vector<std::complex<double>> line(p);
    for (size_t r = 0; r < n; r++, stride *= p) {
        for (uint64_t base = 0; base < outcomes; base++) {
            if (base / stride % p != 0) {
                continue;
            }
            for (uint32_t t = 0; t < p; t++) {
                line[t] = g[base + t * stride];
            }
            for (uint32_t s = 0; s < p; s++) {
                std::complex<double> total = 0;
                for (uint32_t t = 0; t < p; t++) {
                    total += roots[(uint64_t)s * t % p] * line[t];
                }
                g[base + s * stride] = total;
            }
        }
    }
    // g is now indexed by b with b_1 least significant; reorder to register 0 most significant.
    std::vector<std::complex<double>> result(outcomes);
    for (uint64_t index = 0; index < outcomes; index++) {
        auto outcome = outcome_at(modulus, n, index);
        uint64_t packed = 0;
        for (size_t r = n; r-- > 0;) {
            packed = packed * p + outcome[r];
        }
        result[index] = g[packed] * scale;
    }
    return result;
}

}  // namespace quopath
