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

#ifndef QUOPATH_EVALUATOR_H
#define QUOPATH_EVALUATOR_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "quopath/circuit.h"
#include "quopath/exact_scalar.h"
#include "quopath/pathsum.h"
#include "quopath/quadform.h"

namespace quopath {

using Rational = boost::multiprecision::cpp_rational;

/// sum_{y in F_p} chi(lambda y^2 + mu y), in closed form.
ExactScalar weil_sum(const FieldElement &lambda, const FieldElement &mu);

/// Indices (0-based) of the diagonal coordinates: X has lambda != 0, Y has
/// lambda = mu = 0, Z has lambda = 0 and mu != 0.
struct PartitionXYZ {
    std::vector<size_t> X;
    std::vector<size_t> Y;
    std::vector<size_t> Z;
};

struct AmplitudeReport {
    ExactScalar amplitude;
    /// p^{-(n + r - alpha)} if Z is empty, else 0.
    Rational probability;
    size_t r;
    size_t alpha;
    size_t z_size;
    /// p^{-(n + r - alpha)/2}, the common magnitude of every nonzero amplitude.
    ExactScalar weight;
};

/// Every intermediate of one amplitude evaluation, for --explain.
struct AmplitudeTrace {
    LabeledCircuit labeled;
    QuadraticForm form;
    DiagonalizationResult diagonalization;
    std::vector<uint32_t> mu;
    PartitionXYZ partition;
    AmplitudeReport report;
};

/// Assembles the amplitude from diag(lambda), mu = L^T eta and zeta.
AmplitudeReport assemble_amplitude(
    OddPrime modulus,
    size_t num_registers,
    const std::vector<uint32_t> &lambda,
    const std::vector<uint32_t> &mu,
    uint32_t zeta,
    PartitionXYZ *partition = nullptr);

/// Full pipeline: normalize, classify, label, extract, diagonalize, evaluate.
AmplitudeReport amplitude(const Circuit &circuit, std::span<const uint32_t> a, std::span<const uint32_t> b);
Rational probability(const Circuit &circuit, std::span<const uint32_t> a, std::span<const uint32_t> b);
AmplitudeTrace explain_amplitude(const Circuit &circuit, std::span<const uint32_t> a, std::span<const uint32_t> b);

struct BalanceWeight {
    ExactScalar weight;
    size_t r;
    size_t alpha;
};

/// Weight of the (balanced) unitary, read off from rank(Theta) at (a, b) = (0, 0).
BalanceWeight balance_weight(const Circuit &circuit);

/// Caches everything that does not depend on (a, b): the standard form, its
/// Fourier classification and the diagonalization of Theta.
class PathSumEvaluator {
   public:
    explicit PathSumEvaluator(const Circuit &circuit);

    const Circuit &standard_circuit() const {
        return standard_;
    }
    size_t alpha() const {
        return diagonalization_.dim();
    }
    size_t rank() const {
        return diagonalization_.rank();
    }
    const DiagonalizationResult &diagonalization() const {
        return diagonalization_;
    }
    BalanceWeight weight() const;

    AmplitudeReport evaluate(std::span<const uint32_t> a, std::span<const uint32_t> b) const;

   private:
    Circuit standard_;
    DiagonalizationResult diagonalization_;
};

constexpr uint64_t kDefaultTableCap = 100000;

/// Reports for every b in F_p^n, lexicographic with register 0 most
/// significant. Throws CapExceeded if p^n > cap.
std::vector<AmplitudeReport> amplitude_table(
    const Circuit &circuit, std::span<const uint32_t> a, uint64_t cap = kDefaultTableCap);

}  // namespace quopath

#endif
