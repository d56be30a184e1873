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

#include "quopath/evaluator.h"

namespace quopath {

namespace {

Rational inverse_power(uint32_t p, int64_t exponent) {
    boost::multiprecision::cpp_int power = boost::multiprecision::pow(boost::multiprecision::cpp_int(p), (unsigned)std::abs(exponent));
    return exponent >= 0 ? Rational(1) / Rational(power) : Rational(power);
}

}  // namespace

ExactScalar weil_sum(const FieldElement &lambda, const FieldElement &mu) {
    if (lambda.modulus() != mu.modulus()) {
        throw std::invalid_argument("weil_sum arguments have different moduli");
    }
    const OddPrime modulus = lambda.modulus();
    const uint32_t p = modulus.value();
    if (lambda.is_zero()) {
        return mu.is_zero() ? ExactScalar::make(modulus, 2, 0, 0) : ExactScalar::zero(modulus);
    }
    // i^eps(p) chi(-4^{-1} lambda^{-1} mu^2) (lambda/p) sqrt(p); the sign -1 is i^2.
    uint32_t four_inv = zp::inv(4 % p, p);
    uint32_t c = zp::neg(zp::mul(zp::mul(four_inv, zp::inv(lambda.residue(), p), p), zp::mul(mu.residue(), mu.residue(), p), p), p);
    int quarter_turns = modulus.epsilon() + (legendre(lambda) == -1 ? 2 : 0);
    return ExactScalar::make(modulus, 1, quarter_turns, c);
}

AmplitudeReport assemble_amplitude(
    OddPrime modulus,
    size_t num_registers,
    const std::vector<uint32_t> &lambda,
    const std::vector<uint32_t> &mu,
    uint32_t zeta,
    PartitionXYZ *partition) {
    const uint32_t p = modulus.value();
    const size_t alpha = lambda.size();
    PartitionXYZ parts;
    for (size_t i = 0; i < alpha; i++) {
        if (lambda[i] != 0) {
            parts.X.push_back(i);
        } else if (mu[i] == 0) {
            parts.Y.push_back(i);
        } else {
            parts.Z.push_back(i);
        }
    }
    const size_t r = parts.X.size();
    const int64_t exponent = (int64_t)num_registers + (int64_t)r - (int64_t)alpha;

    AmplitudeReport report{
        ExactScalar::zero(modulus),
        Rational(0),
        r,
        alpha,
        parts.Z.size(),
        ExactScalar::make(modulus, -exponent, 0, 0)};
    if (parts.Z.empty()) {
        uint32_t lambda_product = 1;
        uint32_t correction = 0;
        for (size_t i : parts.X) {
            lambda_product = zp::mul(lambda_product, lambda[i], p);
            correction = zp::add(correction, zp::mul(zp::inv(lambda[i], p), zp::mul(mu[i], mu[i], p), p), p);
        }
        uint32_t phase = zp::sub(zeta, zp::mul(zp::inv(4 % p, p), correction, p), p);
        int64_t quarter_turns = (int64_t)r * modulus.epsilon() + (legendre(lambda_product, p) == -1 ? 2 : 0);
        report.amplitude = ExactScalar::make(modulus, -exponent, quarter_turns, phase);
        report.probability = inverse_power(p, exponent);
    }
    if (partition != nullptr) {
        *partition = std::move(parts);
    }
    return report;
}

AmplitudeTrace explain_amplitude(const Circuit &circuit, std::span<const uint32_t> a, std::span<const uint32_t> b) {
    Circuit standard = normalize_to_standard_form(circuit);
    LabeledCircuit labeled = label_circuit(standard, a, b);
    QuadraticForm form = extract_phase_polynomial(labeled);
    DiagonalizationResult diag = diagonalize(form.theta);
    std::vector<uint32_t> mu = diag.transform_linear(form.eta);
    PartitionXYZ partition;
    AmplitudeReport report =
        assemble_amplitude(circuit.modulus(), circuit.num_registers(), diag.diagonal(), mu, form.zeta, &partition);
    return AmplitudeTrace{
        std::move(labeled), std::move(form), std::move(diag), std::move(mu), std::move(partition), std::move(report)};
}

AmplitudeReport amplitude(const Circuit &circuit, std::span<const uint32_t> a, std::span<const uint32_t> b) {
    return explain_amplitude(circuit, a, b).report;
}

Rational probability(const Circuit &circuit, std::span<const uint32_t> a, std::span<const uint32_t> b) {
    return amplitude(circuit, a, b).probability;
}

BalanceWeight balance_weight(const Circuit &circuit) {
    return PathSumEvaluator(circuit).weight();
}

PathSumEvaluator::PathSumEvaluator(const Circuit &circuit)
    : standard_(normalize_to_standard_form(circuit)), diagonalization_(circuit.modulus(), 0) {
    std::vector<uint32_t> zeros(standard_.num_registers(), 0);
    diagonalization_ = diagonalize(extract_phase_polynomial(label_circuit(standard_, zeros, zeros)).theta);
}

BalanceWeight PathSumEvaluator::weight() const {
    int64_t exponent = (int64_t)standard_.num_registers() + (int64_t)rank() - (int64_t)alpha();
    return {ExactScalar::make(standard_.modulus(), -exponent, 0, 0), rank(), alpha()};
}

AmplitudeReport PathSumEvaluator::evaluate(std::span<const uint32_t> a, std::span<const uint32_t> b) const {
    QuadraticForm form = extract_phase_polynomial(label_circuit(standard_, a, b));
    std::vector<uint32_t> mu = diagonalization_.transform_linear(form.eta);
    return assemble_amplitude(standard_.modulus(), standard_.num_registers(), diagonalization_.diagonal(), mu, form.zeta);
}

std::vector<AmplitudeReport> amplitude_table(const Circuit &circuit, std::span<const uint32_t> a, uint64_t cap) {
    const uint64_t p = circuit.modulus().value();
    uint64_t count = 1;
    for (size_t r = 0; r < circuit.num_registers(); r++) {
        count *= p;
        if (count > cap) {
            throw CapExceeded(
                "table has more than " + std::to_string(cap) + " rows (p^n with p = " + std::to_string(p) +
                ", n = " + std::to_string(circuit.num_registers()) + ")");
        }
    }
    PathSumEvaluator evaluator(circuit);
    std::vector<AmplitudeReport> rows;
    rows.reserve(count);
    for (uint64_t index = 0; index < count; index++) {
        rows.push_back(evaluator.evaluate(a, outcome_at(circuit.modulus(), circuit.num_registers(), index)));
    }
    return rows;
}

}  // namespace quopath
