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

#include "quopath/exact_scalar.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace quopath {
namespace {

TEST(ExactScalar, ZeroIsCanonical) {
    OddPrime p(5);
    ExactScalar z = ExactScalar::zero(p);
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.sqrtp_exponent(), 0);
    EXPECT_EQ(z.quarter_turns(), 0);
    EXPECT_EQ(z.p_phase().residue(), 0u);
    EXPECT_EQ(z * ExactScalar::make(p, 3, 1, 2), z);
    EXPECT_EQ(z.str(), "0");
}

TEST(ExactScalar, MakeReduces) {
    OddPrime p(7);
    EXPECT_EQ(ExactScalar::make(p, 1, 5, 9), ExactScalar::make(p, 1, 1, 2));
    EXPECT_EQ(ExactScalar::make(p, 1, -1, -1), ExactScalar::make(p, 1, 3, 6));
}

TEST(ExactScalar, Multiplication) {
    OddPrime p(5);
    ExactScalar x = ExactScalar::make(p, -1, 3, 2);
    ExactScalar y = ExactScalar::make(p, 3, 2, 4);
    ExactScalar xy = x * y;
    EXPECT_EQ(xy, ExactScalar::make(p, 2, 1, 1));
    EXPECT_EQ(exact_mul(x, y), xy);
    std::complex<double> expected = x.to_complex() * y.to_complex();
    EXPECT_LT(std::abs(xy.to_complex() - expected), 1e-12);
}

TEST(ExactScalar, ConjugateGivesModulusSquared) {
    OddPrime p(7);
    ExactScalar x = ExactScalar::make(p, -3, 1, 5);
    ExactScalar n = x * x.conj();
    EXPECT_EQ(n, ExactScalar::make(p, -6, 0, 0));
}

TEST(ExactScalar, ToComplex) {
    OddPrime p(3);
    std::complex<double> v = ExactScalar::make(p, -1, 0, 0).to_complex();
    EXPECT_NEAR(v.real(), 1 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(v.imag(), 0, 1e-15);
    v = ExactScalar::make(OddPrime(5), 0, 1, 1).to_complex();
    std::complex<double> expected = std::complex<double>(0, 1) * std::polar(1.0, 2 * std::numbers::pi / 5);
    EXPECT_LT(std::abs(v - expected), 1e-15);
    EXPECT_LT(std::abs(exact_to_complex(ExactScalar::make(p, 2, 2, 0)) - std::complex<double>(-3, 0)), 1e-14);
}

TEST(ExactScalar, StringRoundTrip) {
    OddPrime p(3);
    EXPECT_EQ(ExactScalar::make(p, -1, 0, 0).str(), "3^(-1/2) * i^0 * chi(0)");
    for (int k = -4; k <= 4; k++) {
        for (int q = 0; q < 4; q++) {
            for (int c = 0; c < 3; c++) {
                ExactScalar s = ExactScalar::make(p, k, q, c);
                EXPECT_EQ(ExactScalar::parse(s.str(), p), s);
            }
        }
    }
    EXPECT_EQ(ExactScalar::parse("0", p), ExactScalar::zero(p));
    EXPECT_THROW(ExactScalar::parse("3^(1/2) * i^5 * chi(0)", p), std::invalid_argument);
    EXPECT_THROW(ExactScalar::parse("5^(1/2) * i^0 * chi(0)", p), std::invalid_argument);
    EXPECT_THROW(ExactScalar::parse("garbage", p), std::invalid_argument);
}

}  // namespace
}  // namespace quopath
