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

#ifndef QUOPATH_EXACT_SCALAR_H
#define QUOPATH_EXACT_SCALAR_H

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "quopath/fp.h"

namespace quopath {

/// A complex number of the form p^{k/2} * i^q * chi(c), or zero.
///
/// chi(c) = exp(2 pi i c / p). Since gcd(4, p) = 1 the phase i^q chi(c) is the
/// primitive (4p)-th root of unity raised to qp + 4c, so (k, q, c) is a
/// canonical encoding and equality can be structural. Zero is normalized to
/// (0, 0, 0).
class ExactScalar {
   public:
    static ExactScalar zero(OddPrime modulus);
    static ExactScalar one(OddPrime modulus);
    /// p^{k/2} * i^q * chi(c). q and c are reduced into range.
    static ExactScalar make(OddPrime modulus, int64_t sqrtp_exponent, int64_t quarter_turns, int64_t p_phase);

    bool is_zero() const {
        return is_zero_;
    }
    int64_t sqrtp_exponent() const {
        return sqrtp_exponent_;
    }
    int quarter_turns() const {
        return quarter_turns_;
    }
    FieldElement p_phase() const {
        return FieldElement::from_residue(modulus_, p_phase_);
    }
    OddPrime modulus() const {
        return modulus_;
    }

    /// Product; throws std::invalid_argument on a modulus mismatch.
    ExactScalar operator*(const ExactScalar &other) const;
    ExactScalar conj() const;

    std::complex<double> to_complex() const;

    /// `p^(k/2) * i^q * chi(c)`, or `0`.
    std::string str() const;
    /// Inverse of str(). The base must match `modulus`.
    static ExactScalar parse(std::string_view text, OddPrime modulus);

    bool operator==(const ExactScalar &other) const = default;

   private:
    ExactScalar(OddPrime modulus) : modulus_(modulus) {
    }

    bool is_zero_ = true;
    int64_t sqrtp_exponent_ = 0;
    int quarter_turns_ = 0;
    uint32_t p_phase_ = 0;
    OddPrime modulus_;
};

ExactScalar exact_mul(const ExactScalar &s1, const ExactScalar &s2);

inline std::complex<double> exact_to_complex(const ExactScalar &s) {
    return s.to_complex();
}

std::ostream &operator<<(std::ostream &out, const ExactScalar &s);

}  // namespace quopath

#endif
