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

#ifndef QUOPATH_FP_H
#define QUOPATH_FP_H

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace quopath {

/// An odd prime p, the local dimension of every register.
///
/// Validated by trial division at construction. Values are capped at 2^31 so
/// that products of two residues always fit in 64 bits.
class OddPrime {
   public:
    explicit OddPrime(uint64_t value);

    uint32_t value() const {
        return value_;
    }

    /// 2^{-1} mod p, i.e. (p + 1) / 2.
    uint32_t half() const {
        return (value_ + 1) / 2;
    }

    /// 0 if p = 1 mod 4, otherwise 1.
    int epsilon() const {
        return value_ % 4 == 1 ? 0 : 1;
    }

    bool operator==(const OddPrime &other) const = default;

   private:
    uint32_t value_;
};

bool is_odd_prime(uint64_t value);

/// Raw residue helpers. All arguments must already be reduced mod p.
namespace zp {
inline uint32_t add(uint32_t x, uint32_t y, uint32_t p) {
    uint64_t s = (uint64_t)x + y;
    return (uint32_t)(s >= p ? s - p : s);
}
inline uint32_t sub(uint32_t x, uint32_t y, uint32_t p) {
    return x >= y ? x - y : (uint32_t)((uint64_t)x + p - y);
}
inline uint32_t neg(uint32_t x, uint32_t p) {
    return x == 0 ? 0 : p - x;
}
inline uint32_t mul(uint32_t x, uint32_t y, uint32_t p) {
    return (uint32_t)(((uint64_t)x * y) % p);
}
uint32_t pow(uint32_t base, uint64_t exponent, uint32_t p);
/// Modular inverse by the extended Euclidean algorithm. Throws std::domain_error on 0.
uint32_t inv(uint32_t x, uint32_t p);
/// Reduces any signed integer into [0, p).
inline uint32_t reduce(int64_t x, uint32_t p) {
    int64_t r = x % (int64_t)p;
    return (uint32_t)(r < 0 ? r + p : r);
}
}  // namespace zp

/// An element of F_p.
class FieldElement {
   public:
    FieldElement(OddPrime modulus, int64_t value) : residue_(zp::reduce(value, modulus.value())), modulus_(modulus) {
    }
    static FieldElement zero(OddPrime modulus) {
        return FieldElement(modulus, 0);
    }
    static FieldElement from_residue(OddPrime modulus, uint32_t residue);

    uint32_t residue() const {
        return residue_;
    }
    OddPrime modulus() const {
        return modulus_;
    }
    bool is_zero() const {
        return residue_ == 0;
    }

    FieldElement operator+(const FieldElement &other) const;
    FieldElement operator-(const FieldElement &other) const;
    FieldElement operator*(const FieldElement &other) const;
    FieldElement operator-() const;
    FieldElement &operator+=(const FieldElement &other);
    FieldElement &operator-=(const FieldElement &other);
    FieldElement &operator*=(const FieldElement &other);

    FieldElement pow(uint64_t exponent) const;
    /// Throws std::domain_error when the element is zero.
    FieldElement inverse() const;

    bool operator==(const FieldElement &other) const = default;

   private:
    FieldElement(uint32_t residue, OddPrime modulus, int) : residue_(residue), modulus_(modulus) {
    }
    void check_same_field(const FieldElement &other) const;

    uint32_t residue_;
    OddPrime modulus_;
};

/// Multiplicative inverse of a nonzero field element.
FieldElement field_inverse(const FieldElement &x);

/// Legendre symbol (x/p) in {-1, 0, +1}, computed with Euler's criterion.
int legendre(const FieldElement &x);
int legendre(uint32_t residue, uint32_t p);

std::ostream &operator<<(std::ostream &out, const FieldElement &x);
std::ostream &operator<<(std::ostream &out, const OddPrime &p);

}  // namespace quopath

#endif
