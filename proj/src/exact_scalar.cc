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

#include <cmath>
#include <numbers>
#include <ostream>
#include <regex>
#include <stdexcept>

namespace quopath {

ExactScalar ExactScalar::zero(OddPrime modulus) {
    return ExactScalar(modulus);
}

ExactScalar ExactScalar::one(OddPrime modulus) {
    return make(modulus, 0, 0, 0);
}

ExactScalar ExactScalar::make(OddPrime modulus, int64_t sqrtp_exponent, int64_t quarter_turns, int64_t p_phase) {
    ExactScalar s(modulus);
    s.is_zero_ = false;
    s.sqrtp_exponent_ = sqrtp_exponent;
    s.quarter_turns_ = (int)(((quarter_turns % 4) + 4) % 4);
    s.p_phase_ = zp::reduce(p_phase, modulus.value());
    return s;
}

ExactScalar ExactScalar::operator*(const ExactScalar &other) const {
    if (modulus_ != other.modulus_) {
        throw std::invalid_argument("exact scalars have different moduli");
    }
    if (is_zero_ || other.is_zero_) {
        return zero(modulus_);
    }
    return make(
        modulus_,
        sqrtp_exponent_ + other.sqrtp_exponent_,
        quarter_turns_ + other.quarter_turns_,
        (int64_t)p_phase_ + other.p_phase_);
}

ExactScalar ExactScalar::conj() const {
    if (is_zero_) {
        return *this;
    }
    return make(modulus_, sqrtp_exponent_, -quarter_turns_, -(int64_t)p_phase_);
}

std::complex<double> ExactScalar::to_complex() const {
    if (is_zero_) {
        return {0.0, 0.0};
    }
    uint64_t p = modulus_.value();
    double magnitude = std::pow((double)p, (double)sqrtp_exponent_ / 2.0);
    // Phase is e^{2 pi i (q p + 4 c) / (4 p)}; reduce the numerator exactly first.
    uint64_t numerator = ((uint64_t)quarter_turns_ * p + 4 * (uint64_t)p_phase_) % (4 * p);
    double angle = 2.0 * std::numbers::pi * (double)numerator / (double)(4 * p);
    return std::polar(magnitude, angle);
}

std::string ExactScalar::str() const {
    if (is_zero_) {
        return "0";
    }
    return std::to_string(modulus_.value()) + "^(" + std::to_string(sqrtp_exponent_) + "/2) * i^" +
           std::to_string(quarter_turns_) + " * chi(" + std::to_string(p_phase_) + ")";
}

ExactScalar ExactScalar::parse(std::string_view text, OddPrime modulus) {
    static const std::regex zero_form(R"(\s*0\s*)");
    static const std::regex form(R"(\s*(\d+)\^\((-?\d+)/2\)\s*\*\s*i\^(\d+)\s*\*\s*chi\((\d+)\)\s*)");
    std::string owned(text);
    if (std::regex_match(owned, zero_form)) {
        return zero(modulus);
    }
    std::smatch m;
    if (!std::regex_match(owned, m, form)) {
        throw std::invalid_argument("malformed exact scalar: '" + owned + "'");
    }
    if (std::stoull(m[1].str()) != modulus.value()) {
        throw std::invalid_argument("exact scalar base " + m[1].str() + " does not match modulus");
    }
    int64_t k = std::stoll(m[2].str());
    uint64_t q = std::stoull(m[3].str());
    uint64_t c = std::stoull(m[4].str());
    if (q >= 4 || c >= modulus.value()) {
        throw std::invalid_argument("exact scalar is not in canonical form: '" + owned + "'");
    }
    return make(modulus, k, (int64_t)q, (int64_t)c);
}

ExactScalar exact_mul(const ExactScalar &s1, const ExactScalar &s2) {
    return s1 * s2;
}

std::ostream &operator<<(std::ostream &out, const ExactScalar &s) {
    return out << s.str();
}

}  // namespace quopath
