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

#include "quopath/quadform.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quopath {

FpMatrix::FpMatrix(OddPrime modulus, size_t rows, size_t cols)
    : modulus_(modulus), rows_(rows), cols_(cols), data_(rows * cols, 0) {
}

FpMatrix FpMatrix::identity(OddPrime modulus, size_t n) {
    FpMatrix m(modulus, n, n);
    for (size_t i = 0; i < n; i++) {
        m(i, i) = 1;
    }
    return m;
}

FpMatrix FpMatrix::from_rows(OddPrime modulus, const std::vector<std::vector<int64_t>> &rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    FpMatrix m(modulus, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); i++) {
        if (rows[i].size() != cols) {
            throw std::invalid_argument("ragged matrix rows");
        }
        for (size_t j = 0; j < cols; j++) {
            m(i, j) = zp::reduce(rows[i][j], modulus.value());
        }
    }
    return m;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(modulus_, cols_, rows_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

FpMatrix FpMatrix::operator*(const FpMatrix &other) const {
    if (cols_ != other.rows_ || modulus_ != other.modulus_) {
        throw std::invalid_argument("incompatible matrix product");
    }
    uint64_t p = modulus_.value();
    FpMatrix out(modulus_, rows_, other.cols_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t k = 0; k < cols_; k++) {
            uint64_t x = (*this)(i, k);
            if (x == 0) {
                continue;
            }
            for (size_t j = 0; j < other.cols_; j++) {
                out(i, j) = (uint32_t)((out(i, j) + x * other(k, j)) % p);
            }
        }
    }
    return out;
}

bool FpMatrix::is_symmetric() const {
    if (rows_ != cols_) {
        return false;
    }
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < i; j++) {
            if ((*this)(i, j) != (*this)(j, i)) {
                return false;
            }
        }
    }
    return true;
}

bool FpMatrix::is_diagonal() const {
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            if (i != j && (*this)(i, j) != 0) {
                return false;
            }
        }
    }
    return true;
}

std::string FpMatrix::str() const {
    std::stringstream out;
    for (size_t i = 0; i < rows_; i++) {
        out << "[";
        for (size_t j = 0; j < cols_; j++) {
            if (j) {
                out << " ";
            }
            out << (*this)(i, j);
        }
        out << "]\n";
    }
    return out.str();
}

SymmetricMatrix::SymmetricMatrix(OddPrime modulus, size_t dim) : modulus_(modulus), dim_(dim), data_(dim * dim, 0) {
}

SymmetricMatrix::SymmetricMatrix(const FpMatrix &m) : SymmetricMatrix(m.modulus(), m.rows()) {
    if (!m.is_symmetric()) {
        throw std::invalid_argument("matrix is not symmetric");
    }
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            data_[i * dim_ + j] = m(i, j);
        }
    }
}

SymmetricMatrix SymmetricMatrix::from_rows(OddPrime modulus, const std::vector<std::vector<int64_t>> &rows) {
    return SymmetricMatrix(FpMatrix::from_rows(modulus, rows));
}

void SymmetricMatrix::set(size_t i, size_t j, uint32_t residue) {
    residue %= modulus_.value();
    data_[i * dim_ + j] = residue;
    data_[j * dim_ + i] = residue;
}

void SymmetricMatrix::add(size_t i, size_t j, uint32_t residue) {
    uint32_t p = modulus_.value();
    data_[i * dim_ + j] = zp::add(data_[i * dim_ + j], residue % p, p);
    if (i != j) {
        data_[j * dim_ + i] = zp::add(data_[j * dim_ + i], residue % p, p);
    }
}

bool SymmetricMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](uint32_t v) { return v == 0; });
}

FpMatrix SymmetricMatrix::to_matrix() const {
    FpMatrix m(modulus_, dim_, dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            m(i, j) = (*this)(i, j);
        }
    }
    return m;
}

SplitStep split_step(const FpMatrix &A) {
    return split_step(SymmetricMatrix(A));
}

SplitStep split_step(const SymmetricMatrix &A) {
    const OddPrime modulus = A.modulus();
    const uint32_t p = modulus.value();
    const size_t n = A.dim();
    if (n == 0) {
        throw std::invalid_argument("split_step needs a matrix of dimension at least 1");
    }
    if (A.is_zero()) {
        return {FpMatrix::identity(modulus, n), FieldElement::zero(modulus), SymmetricMatrix(modulus, n - 1)};
    }

    uint32_t a = 0;
    std::vector<uint32_t> c(n, 0);
    for (size_t i = 0; i < n && a == 0; i++) {
        if (A(i, i) != 0) {
            a = A(i, i);
            c[i] = 1;
        }
    }
    for (size_t i = 0; i < n && a == 0; i++) {
        for (size_t j = 0; j < n; j++) {
            if (A(i, j) != 0) {
                a = zp::add(A(i, j), A(i, j), p);
                c[i] = 1;
                c[j] = 1;
                break;
            }
        }
    }
    const uint32_t a_inv = zp::inv(a, p);

    size_t M = 0;
    while (c[M] == 0) {
        M++;
    }

    FpMatrix C(modulus, n, n);
    for (size_t i = 0; i < n; i++) {
        C(i, 0) = c[i];
        for (size_t j = 1; j < n; j++) {
            if (i < M) {
                C(i, j) = i + 1 == j ? 1 : 0;
            } else if (i > M) {
                C(i, j) = i == j ? 1 : 0;
            }
        }
    }

    FpMatrix CtAC = C.transpose() * A.to_matrix() * C;
    // b_l = sum_ij c_i A_ij C_jl, which is row 0 of C^T A C since C e_1 = c.
    std::vector<uint32_t> b(n);
    for (size_t l = 0; l < n; l++) {
        b[l] = CtAC(0, l);
    }

    // g(y_2..y_n) = sum_{k,l>1} (C^T A C)_kl y_k y_l - a^{-1} (sum_{i>1} b_i y_i)^2
    auto g = [&](const std::vector<uint32_t> &y) {
        uint32_t quad = 0;
        uint32_t lin = 0;
        for (size_t k = 1; k < n; k++) {
            if (y[k - 1] == 0) {
                continue;
            }
            lin = zp::add(lin, zp::mul(b[k], y[k - 1], p), p);
            for (size_t l = 1; l < n; l++) {
                quad = zp::add(quad, zp::mul(zp::mul(CtAC(k, l), y[k - 1], p), y[l - 1], p), p);
            }
        }
        return zp::sub(quad, zp::mul(a_inv, zp::mul(lin, lin, p), p), p);
    };

    FpMatrix D = FpMatrix::identity(modulus, n);
    for (size_t j = 1; j < n; j++) {
        D(0, j) = zp::neg(zp::mul(b[j], a_inv, p), p);
    }

    // B_ij = 2^{-1} [g(e_i + e_j) - g(e_i) - g(e_j)]
    auto basis_sum = [&](std::initializer_list<size_t> indices) {
        std::vector<uint32_t> y(n - 1, 0);
        for (size_t i : indices) {
            y[i] += 1;
        }
        return y;
    };
    SymmetricMatrix B(modulus, n - 1);
    for (size_t i = 0; i < n - 1; i++) {
        for (size_t j = i; j < n - 1; j++) {
            uint32_t polar = zp::sub(zp::sub(g(basis_sum({i, j})), g(basis_sum({i})), p), g(basis_sum({j})), p);
            B.set(i, j, zp::mul(modulus.half(), polar, p));
        }
    }

    return {C * D, FieldElement::from_residue(modulus, a), std::move(B)};
}

namespace {

/// Dense scratch copy of the not-yet-eliminated block, in original coordinates.
class Workspace {
   public:
    explicit Workspace(const SymmetricMatrix &theta) : n_(theta.dim()), w_(theta.data()) {
    }
    uint32_t &at(size_t i, size_t j) {
        return w_[i * n_ + j];
    }

   private:
    size_t n_;
    std::vector<uint32_t> w_;
};

SymmetricMatrix active_block(Workspace &w, const std::vector<uint32_t> &active, OddPrime modulus) {
    SymmetricMatrix block(modulus, active.size());
    for (size_t i = 0; i < active.size(); i++) {
        for (size_t j = i; j < active.size(); j++) {
            block.set(i, j, w.at(active[i], active[j]));
        }
    }
    return block;
}

void verify_against_split_step(
    const SymmetricMatrix &before,
    const SymmetricMatrix &after,
    const std::vector<uint32_t> &active_before,
    const DiagonalizationResult::Step &step,
    uint32_t a) {
    OddPrime modulus = before.modulus();
    uint32_t p = modulus.value();
    SplitStep reference = split_step(before);
    size_t k = before.dim();

    // P implied by the in-place step: column 1 is c, column j is e_sigma(j) - (b_j / a) c.
    FpMatrix P = FpMatrix::identity(modulus, k);
    if (step.kind == DiagonalizationResult::StepKind::DiagonalPivot ||
        step.kind == DiagonalizationResult::StepKind::PairPivot) {
        auto local = [&](uint32_t index) {
            return (size_t)(std::find(active_before.begin(), active_before.end(), index) - active_before.begin());
        };
        std::vector<uint32_t> c(k, 0);
        c[local(step.pivot)] = 1;
        if (step.kind == DiagonalizationResult::StepKind::PairPivot) {
            c[local(step.partner)] = 1;
        }
        size_t M = local(step.pivot);
        P = FpMatrix(modulus, k, k);
        for (size_t i = 0; i < k; i++) {
            P(i, 0) = c[i];
        }
        size_t column = 1;
        for (size_t i = 0; i < k; i++) {
            if (i == M) {
                continue;
            }
            P(i, column) = 1;
            column++;
        }
        for (const auto &[index, bj] : step.b) {
            size_t j = local(index);
            size_t col = j < M ? j + 1 : j;
            uint32_t f = zp::mul(bj, step.a_inverse, p);
            for (size_t i = 0; i < k; i++) {
                P(i, col) = zp::sub(P(i, col), zp::mul(f, c[i], p), p);
            }
        }
    }

    if (reference.a.residue() != a || !(reference.B == after) || !(reference.P == P)) {
        throw std::logic_error("in-place reduction step disagrees with split_step");
    }
    FpMatrix lhs = P.transpose() * before.to_matrix() * P;
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < k; j++) {
            uint32_t expected = (i == 0 && j == 0) ? a : (i > 0 && j > 0 ? after(i - 1, j - 1) : 0);
            if (lhs(i, j) != expected) {
                throw std::logic_error("P^T A P != a (+) B at a reduction step");
            }
        }
    }
}

}  // namespace

DiagonalizationResult diagonalize(const FpMatrix &theta, const DiagonalizeOptions &options) {
    return diagonalize(SymmetricMatrix(theta), options);
}

DiagonalizationResult diagonalize(const SymmetricMatrix &theta, const DiagonalizeOptions &options) {
    using StepKind = DiagonalizationResult::StepKind;
    const OddPrime modulus = theta.modulus();
    const uint32_t p = modulus.value();
    const size_t n = theta.dim();

    DiagonalizationResult result(modulus, n);
    result.diagonal_.reserve(n);
    result.steps_.reserve(n);
    if (n == 0) {
        return result;
    }

    Workspace w(theta);
    std::vector<uint32_t> active(n);
    for (size_t i = 0; i < n; i++) {
        active[i] = (uint32_t)i;
    }
    // Rows known to vanish on the active block stay zero for the rest of the run.
    std::vector<bool> zero_row(n, false);
    bool block_is_zero = false;

    while (active.size() >= 2) {
        const bool verify = options.verify_steps && active.size() <= options.verify_max_dim;
        SymmetricMatrix before = verify ? active_block(w, active, modulus) : SymmetricMatrix(modulus, 0);
        std::vector<uint32_t> active_before = verify ? active : std::vector<uint32_t>{};

        DiagonalizationResult::Step step{StepKind::Zero, active.front(), active.front(), 0, {}};
        uint32_t a = 0;
        if (!block_is_zero) {
            for (uint32_t i : active) {
                if (w.at(i, i) != 0) {
                    step.kind = StepKind::DiagonalPivot;
                    step.pivot = step.partner = i;
                    a = w.at(i, i);
                    break;
                }
            }
            if (step.kind == StepKind::Zero) {
                for (uint32_t i : active) {
                    if (zero_row[i]) {
                        continue;
                    }
                    for (uint32_t j : active) {
                        if (w.at(i, j) != 0) {
                            step.kind = StepKind::PairPivot;
                            step.pivot = i;
                            step.partner = j;
                            a = zp::add(w.at(i, j), w.at(i, j), p);
                            break;
                        }
                    }
                    if (step.kind == StepKind::PairPivot) {
                        break;
                    }
                    zero_row[i] = true;
                }
            }
            block_is_zero = step.kind == StepKind::Zero;
        }

        if (step.kind != StepKind::Zero) {
            const uint32_t I = step.pivot;
            const uint32_t J = step.partner;
            step.a_inverse = zp::inv(a, p);
            for (uint32_t j : active) {
                if (j == I) {
                    continue;
                }
                uint32_t bj = w.at(I, j);
                if (step.kind == StepKind::PairPivot) {
                    bj = zp::add(bj, w.at(J, j), p);
                }
                if (bj != 0) {
                    step.b.emplace_back(j, bj);
                }
            }
            // B = A[rest, rest] - a^{-1} b b^T
            for (const auto &[j, bj] : step.b) {
                uint32_t f = zp::mul(bj, step.a_inverse, p);
                for (const auto &[k, bk] : step.b) {
                    w.at(j, k) = zp::sub(w.at(j, k), zp::mul(f, bk, p), p);
                }
            }
        }

        active.erase(std::find(active.begin(), active.end(), step.pivot));
        result.diagonal_.push_back(a);
        if (verify) {
            verify_against_split_step(before, active_block(w, active, modulus), active_before, step, a);
        }
        result.steps_.push_back(std::move(step));
    }

    uint32_t last = active.front();
    result.diagonal_.push_back(w.at(last, last));
    result.steps_.push_back({StepKind::Last, last, last, 0, {}});

    result.rank_ = (size_t)std::count_if(
        result.diagonal_.begin(), result.diagonal_.end(), [](uint32_t v) { return v != 0; });
    return result;
}

std::vector<uint32_t> DiagonalizationResult::transform_linear(std::span<const uint32_t> eta) const {
    if (eta.size() != dim_) {
        throw std::invalid_argument("linear term has the wrong length");
    }
    const uint32_t p = modulus_.value();
    std::vector<uint32_t> v(eta.begin(), eta.end());
    std::vector<uint32_t> mu(dim_, 0);
    for (size_t pos = 0; pos < steps_.size(); pos++) {
        const Step &step = steps_[pos];
        uint32_t s = v[step.pivot];
        if (step.kind == StepKind::PairPivot) {
            s = zp::add(s, v[step.partner], p);
        }
        mu[pos] = s;
        if (s == 0) {
            continue;
        }
        for (const auto &[j, bj] : step.b) {
            v[j] = zp::sub(v[j], zp::mul(zp::mul(bj, step.a_inverse, p), s, p), p);
        }
    }
    return mu;
}

FpMatrix DiagonalizationResult::L() const {
    const uint32_t p = modulus_.value();
    // columns[j] is the current image of coordinate j; starts as e_j.
    std::vector<std::vector<uint32_t>> columns(dim_, std::vector<uint32_t>(dim_, 0));
    for (size_t j = 0; j < dim_; j++) {
        columns[j][j] = 1;
    }
    FpMatrix L(modulus_, dim_, dim_);
    for (size_t pos = 0; pos < steps_.size(); pos++) {
        const Step &step = steps_[pos];
        std::vector<uint32_t> c = columns[step.pivot];
        if (step.kind == StepKind::PairPivot) {
            for (size_t i = 0; i < dim_; i++) {
                c[i] = zp::add(c[i], columns[step.partner][i], p);
            }
        }
        for (size_t i = 0; i < dim_; i++) {
            L(i, pos) = c[i];
        }
        for (const auto &[j, bj] : step.b) {
            uint32_t f = zp::mul(bj, step.a_inverse, p);
            for (size_t i = 0; i < dim_; i++) {
                columns[j][i] = zp::sub(columns[j][i], zp::mul(f, c[i], p), p);
            }
        }
    }
    return L;
}

}  // namespace quopath
