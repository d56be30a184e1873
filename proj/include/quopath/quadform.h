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

#ifndef QUOPATH_QUADFORM_H
#define QUOPATH_QUADFORM_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "quopath/fp.h"

namespace quopath {

/// Dense row-major matrix over F_p.
class FpMatrix {
   public:
    FpMatrix(OddPrime modulus, size_t rows, size_t cols);
    static FpMatrix identity(OddPrime modulus, size_t n);
    static FpMatrix from_rows(OddPrime modulus, const std::vector<std::vector<int64_t>> &rows);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    OddPrime modulus() const {
        return modulus_;
    }
    uint32_t operator()(size_t i, size_t j) const {
        return data_[i * cols_ + j];
    }
    uint32_t &operator()(size_t i, size_t j) {
        return data_[i * cols_ + j];
    }
    FieldElement at(size_t i, size_t j) const {
        return FieldElement::from_residue(modulus_, (*this)(i, j));
    }

    FpMatrix transpose() const;
    FpMatrix operator*(const FpMatrix &other) const;
    bool is_symmetric() const;
    bool is_diagonal() const;
    std::string str() const;

    bool operator==(const FpMatrix &other) const = default;

   private:
    OddPrime modulus_;
    size_t rows_;
    size_t cols_;
    std::vector<uint32_t> data_;
};

/// Square symmetric matrix over F_p. Writes go to both (i, j) and (j, i).
class SymmetricMatrix {
   public:
    SymmetricMatrix(OddPrime modulus, size_t dim);
    /// Throws std::invalid_argument if `m` is not square and symmetric.
    explicit SymmetricMatrix(const FpMatrix &m);
    static SymmetricMatrix from_rows(OddPrime modulus, const std::vector<std::vector<int64_t>> &rows);

    size_t dim() const {
        return dim_;
    }
    OddPrime modulus() const {
        return modulus_;
    }
    uint32_t operator()(size_t i, size_t j) const {
        return data_[i * dim_ + j];
    }
    FieldElement at(size_t i, size_t j) const {
        return FieldElement::from_residue(modulus_, (*this)(i, j));
    }
    void set(size_t i, size_t j, uint32_t residue);
    void add(size_t i, size_t j, uint32_t residue);

    bool is_zero() const;
    FpMatrix to_matrix() const;
    const std::vector<uint32_t> &data() const {
        return data_;
    }

    bool operator==(const SymmetricMatrix &other) const = default;

   private:
    OddPrime modulus_;
    size_t dim_;
    std::vector<uint32_t> data_;
};

/// One reduction step: P^T A P = a (+) B, with P invertible.
struct SplitStep {
    FpMatrix P;
    FieldElement a;
    SymmetricMatrix B;
};

/// Splits one coordinate off a symmetric matrix (n >= 1).
///
/// Pivot rule: the smallest I with A_II != 0 (c = e_I, a = A_II); otherwise
/// the row-major smallest (I, J) with A_IJ != 0 (c = e_I + e_J, a = 2 A_IJ).
/// M is the smallest index with c_M != 0. The zero matrix gives (I, 0, 0).
/// This is the literal dense construction P = C D, with B recovered from the
/// reduced form g by polarization; diagonalize() uses an equivalent in-place
/// elimination.
SplitStep split_step(const SymmetricMatrix &A);
/// As above, but first checks that `A` is square and symmetric.
SplitStep split_step(const FpMatrix &A);

struct DiagonalizeOptions {
    /// Re-derive each reduction level of dimension <= verify_max_dim with
    /// split_step() and check it agrees with the in-place update.
#ifdef NDEBUG
    bool verify_steps = false;
#else
    bool verify_steps = true;
#endif
    size_t verify_max_dim = 24;
};

/// L^T Theta L = diag(lambda). L is kept as the sequence of elementary
/// reduction steps; L() materializes it and transform_linear() applies L^T.
class DiagonalizationResult {
   public:
    enum class StepKind : uint8_t {
        /// a = A_II, c = e_I.
        DiagonalPivot,
        /// a = 2 A_IJ, c = e_I + e_J.
        PairPivot,
        /// Remaining block was zero; coordinate `pivot` passes through.
        Zero,
        /// Final 1x1 block.
        Last,
    };
    struct Step {
        StepKind kind;
        uint32_t pivot;
        uint32_t partner;
        uint32_t a_inverse;
        /// Nonzero b_j for the surviving coordinates j.
        std::vector<std::pair<uint32_t, uint32_t>> b;
    };

    DiagonalizationResult(OddPrime modulus, size_t dim) : modulus_(modulus), dim_(dim) {
    }

    OddPrime modulus() const {
        return modulus_;
    }
    size_t dim() const {
        return dim_;
    }
    size_t rank() const {
        return rank_;
    }
    const std::vector<uint32_t> &diagonal() const {
        return diagonal_;
    }
    FieldElement lambda(size_t i) const {
        return FieldElement::from_residue(modulus_, diagonal_[i]);
    }
    const std::vector<Step> &steps() const {
        return steps_;
    }

    FpMatrix L() const;
    /// mu = L^T eta.
    std::vector<uint32_t> transform_linear(std::span<const uint32_t> eta) const;

   private:
    friend DiagonalizationResult diagonalize(const SymmetricMatrix &, const DiagonalizeOptions &);

    OddPrime modulus_;
    size_t dim_;
    size_t rank_ = 0;
    std::vector<uint32_t> diagonal_;
    std::vector<Step> steps_;
};

/// Repeated split_step from dimension alpha down to 1. Runs in
/// O(alpha^2 + sum |b|^2) on the dense working copy.
DiagonalizationResult diagonalize(const SymmetricMatrix &theta, const DiagonalizeOptions &options = {});
/// Throws std::invalid_argument on non-symmetric input.
DiagonalizationResult diagonalize(const FpMatrix &theta, const DiagonalizeOptions &options = {});

}  // namespace quopath

#endif
