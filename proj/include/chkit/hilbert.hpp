// Copyright 2026 The chkit Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "chkit/exactnum.hpp"

namespace chkit {

class Vector {
  public:
    explicit Vector(std::size_t dim);
    explicit Vector(std::vector<Scalar> entries);
    Vector(std::initializer_list<Scalar> entries);

    [[nodiscard]] std::size_t dim() const noexcept { return entries_.size(); }
    [[nodiscard]] const Scalar &operator[](std::size_t i) const { return entries_[i]; }
    [[nodiscard]] Scalar &operator[](std::size_t i) { return entries_[i]; }
    [[nodiscard]] std::span<const Scalar> entries() const noexcept { return entries_; }

    [[nodiscard]] bool is_zero() const;

    friend bool operator==(const Vector &, const Vector &) = default;

  private:
    std::vector<Scalar> entries_;
};

/// <u, v> = sum_j conj(u_j) v_j.
Scalar inner_product(const Vector &u, const Vector &v);

/// True when u = lambda * v for some nonzero lambda (both nonzero).
bool projectively_equal(const Vector &u, const Vector &v);

/// Dense square matrix, row-major.
class Matrix {
  public:
    explicit Matrix(std::size_t dim);
    Matrix(std::size_t dim, std::vector<Scalar> row_major);

    static Matrix identity(std::size_t dim);
    static Matrix zero(std::size_t dim) { return Matrix(dim); }
    static Matrix diagonal(std::span<const Scalar> diag);
    /// u * v^dagger
    static Matrix outer(const Vector &u, const Vector &v);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] const Scalar &operator()(std::size_t row, std::size_t col) const
    {
        return entries_[row * dim_ + col];
    }
    [[nodiscard]] Scalar &operator()(std::size_t row, std::size_t col)
    {
        return entries_[row * dim_ + col];
    }

    [[nodiscard]] Matrix adjoint() const;
    [[nodiscard]] Scalar trace() const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_hermitian() const;

    Matrix &operator+=(const Matrix &rhs);
    Matrix &operator-=(const Matrix &rhs);
    Matrix &operator*=(const Scalar &rhs);
    friend Matrix operator+(Matrix lhs, const Matrix &rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix &rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, const Scalar &rhs) { return lhs *= rhs; }
    friend Matrix operator*(const Scalar &lhs, Matrix rhs) { return rhs *= lhs; }
    friend Matrix operator*(const Matrix &lhs, const Matrix &rhs);
    friend Vector operator*(const Matrix &lhs, const Vector &rhs);

    friend bool operator==(const Matrix &, const Matrix &) = default;

    /// Stable textual key; equal matrices give equal keys.
    [[nodiscard]] std::string key() const;

  private:
    std::size_t dim_;
    std::vector<Scalar> entries_;
};

/**
 * @brief Hermitian idempotent matrix.
 *
 * Construction validates both properties exactly. Rank is the trace, which
 * for a projector is a non-negative integer.
 */
class Projector {
  public:
    /// Throws NotAProjector when @p matrix is not Hermitian and idempotent.
    explicit Projector(Matrix matrix);

    static Projector identity(std::size_t dim);
    static Projector zero(std::size_t dim);

    [[nodiscard]] const Matrix &matrix() const noexcept { return matrix_; }
    [[nodiscard]] std::size_t dim() const noexcept { return matrix_.dim(); }
    [[nodiscard]] std::size_t rank() const noexcept { return rank_; }
    [[nodiscard]] bool is_zero() const noexcept { return rank_ == 0; }

    friend bool operator==(const Projector &lhs, const Projector &rhs)
    {
        return lhs.matrix_ == rhs.matrix_;
    }

  private:
    struct Trusted {};
    Projector(Matrix matrix, std::size_t rank, Trusted);

    Matrix matrix_;
    std::size_t rank_ = 0;

    friend Projector complement(const Projector &p);
    friend Projector projector_from_ray(const Vector &v);
    friend class DecompositionOfIdentity;
};

/// v v^dagger / (v^dagger v). Throws ZeroRay for the zero vector.
Projector projector_from_ray(const Vector &v);

/// M = M^dagger and M M = M, exactly.
bool is_projector(const Matrix &m);

/// P Q = Q P. Throws DimMismatch.
bool commutes(const Projector &p, const Projector &q);

/// I - P.
Projector complement(const Projector &p);

/**
 * @brief Validated decomposition of the identity.
 *
 * Cells sum to I, are pairwise orthogonal (D_j D_k = delta_jk D_j), and none
 * is zero. Cells keep their input order; cell k always means position k.
 */
class DecompositionOfIdentity {
  public:
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t size() const noexcept { return cells_.size(); }
    [[nodiscard]] const Projector &cell(std::size_t k) const { return cells_.at(k); }
    [[nodiscard]] std::span<const Projector> cells() const noexcept { return cells_; }

    /// Sum of the listed cells. Always a projector; no revalidation.
    [[nodiscard]] Projector cell_sum(std::span<const std::size_t> indices) const;

  private:
    DecompositionOfIdentity(std::size_t dim, std::vector<Projector> cells)
        : dim_(dim), cells_(std::move(cells))
    {
    }

    std::size_t dim_;
    std::vector<Projector> cells_;

    friend DecompositionOfIdentity validate_decomposition(std::vector<Matrix> cells);
};

/// Errors: DimMismatch, NotAProjector(j), ZeroCell(j), SumNotIdentity,
/// NotOrthogonal(j, k). Checked in that order.
DecompositionOfIdentity validate_decomposition(std::vector<Matrix> cells);
DecompositionOfIdentity validate_decomposition(const std::vector<Projector> &cells);

/// Decomposition whose cells are the rank-1 projectors of an orthogonal basis.
DecompositionOfIdentity decomposition_from_basis(std::span<const Vector> basis);

} // namespace chkit
