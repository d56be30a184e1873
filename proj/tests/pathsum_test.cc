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

#include "quopath/pathsum.h"

#include <gtest/gtest.h>

#include <random>

#include "quopath/oracle.h"
#include "support/test_support.h"

namespace quopath {
namespace {

using V = std::vector<uint32_t>;

TEST(AffineForm, Algebra) {
    OddPrime p(5);
    AffineForm x0 = AffineForm::variable(p, 0);
    AffineForm x2 = AffineForm::variable(p, 2);
    AffineForm c = AffineForm::constant(p, 3);
    AffineForm f = x0 + x2 + c;
    EXPECT_EQ(f.str(), "x1 + x3 + 3");
    EXPECT_EQ((f - x0).str(), "x3 + 3");
    EXPECT_EQ((f - f).str(), "0");
    EXPECT_TRUE((f - f).terms().empty());
    EXPECT_EQ(f.scaled(2).coefficient(2).residue(), 2u);
    EXPECT_EQ(f.scaled(0).terms().size(), 0u);
    EXPECT_EQ(f.evaluate(V{1, 4, 2}).residue(), 1u);
    EXPECT_EQ((x0.scaled(4) + x0).terms().size(), 0u);
}

TEST(LabelCircuit, SingleFourier) {
    Circuit c(OddPrime(5), 1, {Gate::fourier(0)});
    LabeledCircuit lc = label_circuit(c, V{2}, V{3});
    EXPECT_EQ(lc.alpha(), 0u);
    EXPECT_EQ(lc.gates[0].in[0], AffineForm::constant(c.modulus(), 2));
    EXPECT_EQ(lc.gates[0].out[0], AffineForm::constant(c.modulus(), 3));
    QuadraticForm q = extract_phase_polynomial(lc);
    EXPECT_EQ(q.alpha(), 0u);
    EXPECT_EQ(q.zeta, 1u);
}

TEST(LabelCircuit, PhaseThenFourier) {
    Circuit c(OddPrime(3), 1, {Gate::phase(0), Gate::fourier(0)});
    LabeledCircuit lc = label_circuit(c, V{2}, V{1});
    EXPECT_EQ(lc.gates[0].in[0].str(), "2");
    EXPECT_EQ(lc.gates[0].out[0].str(), "2");
    EXPECT_EQ(lc.gates[1].in[0].str(), "2");
    EXPECT_EQ(lc.gates[1].out[0].str(), "1");
}

TEST(LabelCircuit, Validation) {
    Circuit c(OddPrime(3), 1, {Gate::phase(0)});
    EXPECT_THROW(label_circuit(c, V{0}, V{0}), std::invalid_argument);
    Circuit s(OddPrime(3), 1, {Gate::fourier(0)});
    EXPECT_THROW(label_circuit(s, V{0, 0}, V{0}), std::invalid_argument);
    EXPECT_THROW(label_circuit(s, V{3}, V{0}), std::invalid_argument);
}

TEST(Extract, TwoFourierGates) {
    Circuit c(OddPrime(3), 1, {Gate::fourier(0), Gate::fourier(0)});
    QuadraticForm q = extract_phase_polynomial(label_circuit(c, V{2}, V{1}));
    EXPECT_EQ(q.alpha(), 1u);
    EXPECT_EQ(q.theta(0, 0), 0u);
    EXPECT_EQ(q.eta, V{0});
    EXPECT_EQ(q.zeta, 0u);
}

/// The example's phase polynomial, typed in by hand and evaluated directly.
uint32_t hand_polynomial(uint32_t p, const V &a, const V &b, const V &x) {
    int64_t half = (p + 1) / 2;
    int64_t s = (int64_t)a[1] * x[0] + (int64_t)a[2] * x[1] + (int64_t)a[0] * x[2] + (int64_t)x[2] * b[0] +
                (int64_t)b[1] * (a[0] + x[0]) + (int64_t)b[2] * (a[0] + x[0] + x[1]) +
                half * a[0] % p * ((int64_t)a[0] - 1 + p);
    return (uint32_t)(s % p);
}

TEST(Extract, ExampleMatchesHandExpansionEverywhere) {
    for (uint32_t p : {3u, 5u}) {
        Circuit c = testing::labeling_example(p);
        for (uint64_t ai = 0; ai < (uint64_t)p * p * p; ai += 2) {
            for (uint64_t bi = 0; bi < (uint64_t)p * p * p; bi += 3) {
                V a = outcome_at(c.modulus(), 3, ai);
                V b = outcome_at(c.modulus(), 3, bi);
                QuadraticForm q = extract_phase_polynomial(label_circuit(c, a, b));
                for (uint64_t xi = 0; xi < (uint64_t)p * p * p; xi++) {
                    V x = outcome_at(c.modulus(), 3, xi);
                    ASSERT_EQ(q.evaluate(x).residue(), hand_polynomial(p, a, b, x));
                }
            }
        }
    }
}

TEST(Extract, ExampleAtAllOnes) {
    // x1 picks up a2 + b2 + b3 = 3 = 0, x2 picks up a3 + b3, x3 picks up a1 + b1.
    QuadraticForm q = extract_phase_polynomial(label_circuit(testing::labeling_example(), V{1, 1, 1}, V{1, 1, 1}));
    EXPECT_TRUE(q.theta.is_zero());
    EXPECT_EQ(q.eta, (V{0, 2, 2}));
    EXPECT_EQ(q.zeta, 2u);
    EXPECT_EQ(q.str(), "2*x2 + 2*x3 + 2");
}

TEST(Extract, CrossTermsSplitSymmetrically) {
    // F then F on register 0, with a SUM in between from register 1: the
    // second F sees x1 + x2 and outputs x3, giving x1 x3 + x2 x3.
    Circuit c(
        OddPrime(7),
        2,
        {Gate::fourier(0), Gate::fourier(1), Gate::sum(1, 0), Gate::fourier(0), Gate::fourier(0), Gate::fourier(1)});
    QuadraticForm q = extract_phase_polynomial(label_circuit(c, V{0, 0}, V{0, 0}));
    ASSERT_EQ(q.alpha(), 3u);
    EXPECT_EQ(q.theta(0, 2), 4u);
    EXPECT_EQ(q.theta(2, 0), 4u);
    EXPECT_EQ(q.theta(1, 2), 4u);
    EXPECT_EQ(q.theta(0, 1), 0u);
}

TEST(Extract, ThetaIndependentOfInputs) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; trial++) {
        uint32_t p = std::vector<uint32_t>{3, 5, 7}[trial % 3];
        size_t n = 1 + trial % 3;
        Circuit c = normalize_to_standard_form(testing::random_circuit(rng, p, n, 20));
        V zeros(n, 0);
        QuadraticForm base = extract_phase_polynomial(label_circuit(c, zeros, zeros));
        EXPECT_TRUE(base.theta.to_matrix().is_symmetric());
        for (int pair = 0; pair < 10; pair++) {
            QuadraticForm q = extract_phase_polynomial(
                label_circuit(c, testing::random_tuple(rng, p, n), testing::random_tuple(rng, p, n)));
            ASSERT_EQ(q.theta, base.theta);
        }
    }
}

TEST(Extract, PathSumMatchesDenseForSmallAlpha) {
    std::mt19937_64 rng(8);
    int checked = 0;
    while (checked < 60) {
        size_t n = 1 + checked % 3;
        Circuit c = normalize_to_standard_form(testing::random_circuit(rng, 3, n, 12));
        if (classify_fourier_gates(c).alpha > 8) {
            continue;
        }
        V a = testing::random_tuple(rng, 3, n);
        V b = testing::random_tuple(rng, 3, n);
        QuadraticForm q = extract_phase_polynomial(label_circuit(c, a, b));
        EXPECT_LT(std::abs(brute_force_path_sum(q, n) - dense_amplitude(c, a, b)), 1e-9);
        checked++;
    }
}

TEST(Symbolic, ExampleLabels) {
    auto labels = label_circuit_symbolic(testing::labeling_example());
    ASSERT_EQ(labels.size(), 9u);
    EXPECT_EQ(labels[2].out[1].str(), "a1 + x1");
    EXPECT_EQ(labels[5].out[1].str(), "a1 + x1 + x2");
    EXPECT_EQ(labels[6].in[0].str(), "x3");
    EXPECT_EQ(labels[6].out[0].str(), "b1");
}

TEST(Symbolic, PhaseTermRendering) {
    Circuit c(OddPrime(3), 1, {Gate::phase(0), Gate::fourier(0)});
    EXPECT_EQ(symbolic_phase_terms(c), (std::vector<std::string>{"2^-1*a1*(a1 - 1)", "a1*b1"}));
    EXPECT_EQ(symbolic_phase_polynomial(c).str(), "-1/2*a1 + 1/2*a1*a1 + a1*b1");
}

TEST(LabeledCircuit, Dump) {
    Circuit c(OddPrime(3), 1, {Gate::fourier(0), Gate::fourier(0)});
    std::string dump = label_circuit(c, V{2}, V{1}).str();
    EXPECT_NE(dump.find("2 -> x1"), std::string::npos) << dump;
    EXPECT_NE(dump.find("x1 -> 1"), std::string::npos) << dump;
}

}  // namespace
}  // namespace quopath
