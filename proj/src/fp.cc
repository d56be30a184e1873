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

#include "quopath/fp.h"

#include <ostream>
#include <stdexcept>

namespace quopath {

bool is_odd_prime(uint64_t value) {
    if (value < 3 || value % 2 == 0) {
        return false;
    }
    for (uint64_t d = 3; d * d <= value; d += 2) {
        if (value % d == 0) {
            return false;
        }
    }
    return true;
}

OddPrime::OddPrime(uint64_t value) {
    if (value >= (uint64_t{1} << 31)) {
        throw std::invalid_argument("modulus " + std::to_string(value) + " is too large (must be below 2^31)");
    }
    if (!is_odd_prime(value)) {
        throw std::invalid_argument("modulus " + std::to_string(value) + " is not an odd prime");
    }
    value_ = (uint32_t)value;
}

namespace zp {

uint32_t pow(uint32_t base, uint64_t exponent, uint32_t p) {
    uint64_t result = 1 % p;
    uint64_t b = base % p;
    while (exponent) {
        if (exponent & 1) {
            result = result * b % p;
        }
        b = b * b % p;
        exponent >>= 1;
    }
    return (uint32_t)result;
}

uint32_t inv(uint32_t x, uint32_t p) {
    if (x % p == 0) {
        throw std::domain_error("zero has no multiplicative inverse");
    }
    int64_t old_r = x % p, r = p;
    int64_t old_s = 1, s = 0;
    while (r != 0) {
        int64_t q = old_r / r;
        int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    // old_r = gcd = 1 since p is prime.
    return reduce(old_s, p);
}

}  // namespace zp

FieldElement FieldElement::from_residue(OddPrime modulus, uint32_t residue) {
    if (residue >= modulus.value()) {
        throw std::invalid_argument("residue out of range");
    }
    return FieldElement(residue, modulus, 0);
}

void FieldElement::check_same_field(const FieldElement &other) const {
    if (modulus_ != other.modulus_) {
        throw std::invalid_argument("field elements have different moduli");
    }
}

FieldElement FieldElement::operator+(const FieldElement &other) const {
    check_same_field(other);
    return FieldElement(zp::add(residue_, other.residue_, modulus_.value()), modulus_, 0);
}

FieldElement FieldElement::operator-(const FieldElement &other) const {
    check_same_field(other);
    return FieldElement(zp::sub(residue_, other.residue_, modulus_.value()), modulus_, 0);
}

FieldElement FieldElement::operator*(const FieldElement &other) const {
    check_same_field(other);
    return FieldElement(zp::mul(residue_, other.residue_, modulus_.value()), modulus_, 0);
}

FieldElement FieldElement::operator-() const {
    return FieldElement(zp::neg(residue_, modulus_.value()), modulus_, 0);
}

FieldElement &FieldElement::operator+=(const FieldElement &other) {
    return *this = *this + other;
}

FieldElement &FieldElement::operator-=(const FieldElement &other) {
    return *this = *this - other;
}

FieldElement &FieldElement::operator*=(const FieldElement &other) {
    return *this = *this * other;
}

FieldElement FieldElement::pow(uint64_t exponent) const {
    return FieldElement(zp::pow(residue_, exponent, modulus_.value()), modulus_, 0);
}

FieldElement FieldElement::inverse() const {
    return FieldElement(zp::inv(residue_, modulus_.value()), modulus_, 0);
}

FieldElement field_inverse(const FieldElement &x) {
    return x.inverse();
}

int legendre(uint32_t residue, uint32_t p) {
    residue %= p;
    if (residue == 0) {
        return 0;
    }
    return zp::pow(residue, (p - 1) / 2, p) == 1 ? +1 : -1;
}

int legendre(const FieldElement &x) {
    return legendre(x.residue(), x.modulus().value());
}

std::ostream &operator<<(std::ostream &out, const FieldElement &x) {
    return out << x.residue();
}

std::ostream &operator<<(std::ostream &out, const OddPrime &p) {
    return out << p.value();
}

}  // namespace quopath
