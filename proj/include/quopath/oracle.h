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

#ifndef QUOPATH_ORACLE_H
#define QUOPATH_ORACLE_H

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "quopath/circuit.h"
#include "quopath/pathsum.h"

// Brute-force references for validating the closed-form evaluator at small
// sizes. Nothing here uses the diagonalization or the Weil-sum formula.

namespace quopath {

constexpr uint64_t kDenseStateCap = 10000;
constexpr uint64_t kPathSumCap = 1000000;

/// State vector over F_p^n, indexed lexicographically with register 0 the
/// most significant digit.
class DenseState {
   public:
    /// |a>. Throws CapExceeded if p^n > cap.
    DenseState(OddPrime modulus, size_t num_registers, std::span<const uint32_t> a, uint64_t cap = kDenseStateCap);

    /// Applies the gate's matrix literally: F = p^{-1/2} sum chi(st)|s><t|,
    /// R = sum chi(t(t-1)/2)|t><t|, SUM = sum |s, s+t><s, t|.
    void apply(const Gate &gate);
    void apply(const Circuit &circuit);

    std::complex<double> amplitude(std::span<const uint32_t> b) const;
    const std::vector<std::complex<double>> &amplitudes() const {
        return amplitudes_;
    }
    double norm() const;

   private:
    OddPrime modulus_;
    size_t num_registers_;
    std::vector<uint64_t> strides_;
    std::vector<std::complex<double>> roots_;
    std::vector<std::complex<double>> amplitudes_;
};

std::complex<double> dense_amplitude(const Circuit &circuit, std::span<const uint32_t> a, std::span<const uint32_t> b);
/// <b|U|a> for every b, in the order of DenseState.
std::vector<std::complex<double>> dense_output_amplitudes(const Circuit &circuit, std::span<const uint32_t> a);

/// p^{-(n + alpha)/2} sum_{x in F_p^alpha} chi(S(x)). Throws CapExceeded if
/// p^alpha > cap.
std::complex<double> brute_force_path_sum(const QuadraticForm &form, size_t num_registers, uint64_t cap = kPathSumCap);

/// The same enumeration for every outcome b at once. S_{a,b}(x) is affine in
/// b, so it is enough to tabulate S_{a,0}(x) and S_{a,e_r}(x) - S_{a,0}(x)
/// over all x and then sum chi(S_{a,0} + sum_r b_r d_r) per b.
std::vector<std::complex<double>> brute_force_output_amplitudes(
    const Circuit &circuit, std::span<const uint32_t> a, uint64_t cap = kPathSumCap);

}  // namespace quopath

#endif
