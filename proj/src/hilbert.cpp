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

#include "chkit/hilbert.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "chkit/error.hpp"

namespace chkit {

namespace {

void require_same_dim(std::size_t lhs, std::size_t rhs)
{
    if (lhs != rhs) {
        throw Error(ErrorCode::DimMismatch,
                    "dimensions " + std::to_string(lhs) + " and " + std::to_string(rhs));
    }
}

std::size_t projector_rank(const Matrix &m)
{
    const Scalar tr = m.trace();
    // Trace of a projector is a non-negative integer.
    return static_cast<std::size_t>(tr.a().get_num().get_ui());
}

} // namespace

Vector::Vector(std::size_t dim) : entries_(dim) {}

Vector::Vector(std::vector<Scalar> entries) : entries_(std::move(entries)) {}

Vector::Vector(std::initializer_list<Scalar> entries) : entries_(entries) {}

bool Vector::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Scalar &s) { return s.is_zero(); });
}

Scalar inner_product(const Vector &u, const Vector &v)
{
    require_same_dim(u.dim(), v.dim());
    Scalar sum;
    for (std::size_t j = 0; j < u.dim(); ++j) {
        sum.add_product(u[j], v[j], true);
    }
    return sum;
}

bool projectively_equal(const Vector &u, const Vector &v)
{
    require_same_dim(u.dim(), v.dim());
    if (u.is_zero() || v.is_zero()) {
        return false;
    }
    // Anchor at the first nonzero component of u; v must be nonzero there
    // too, and every 2x2 cross product u_j v_k - v_j u_k must vanish.
    std::size_t k = 0;
    while (u[k].is_zero()) {
        ++k;
    }
    if (v[k].is_zero()) {
        return false;
    }
    for (std::size_t j = 0; j < u.dim(); ++j) {
        Scalar lhs;
        Scalar rhs;
        lhs.add_product(u[j], v[k]);
        rhs.add_product(v[j], u[k]);
        if (!(lhs == rhs)) {
            return false;
        }
    }
    return true;
}

Matrix::Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

Matrix::Matrix(std::size_t dim, std::vector<Scalar> row_major)
    : dim_(dim), entries_(std::move(row_major))
{
    if (entries_.size() != dim_ * dim_) {
        throw Error(ErrorCode::DimMismatch, "matrix of dimension " + std::to_string(dim) +
                                                " needs " + std::to_string(dim * dim) +
                                                " entries");
    }
}

Matrix Matrix::identity(std::size_t dim)
{
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> diag)
{
    Matrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

Matrix Matrix::outer(const Vector &u, const Vector &v)
{
    require_same_dim(u.dim(), v.dim());
    Matrix m(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
        for (std::size_t j = 0; j < v.dim(); ++j) {
            m(i, j) = u[i] * v[j].conj();
        }
    }
    return m;
}

Matrix Matrix::adjoint() const
{
    Matrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            m(j, i) = (*this)(i, j).conj();
        }
    }
    return m;
}

Scalar Matrix::trace() const
{
    Scalar sum;
    for (std::size_t i = 0; i < dim_; ++i) {
        sum += (*this)(i, i);
    }
    return sum;
}

bool Matrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Scalar &s) { return s.is_zero(); });
}

bool Matrix::is_hermitian() const
{
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            if (!((*this)(i, j) == (*this)(j, i).conj())) {
                return false;
            }
        }
    }
    return true;
}

Matrix &Matrix::operator+=(const Matrix &rhs)
{
    require_same_dim(dim_, rhs.dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += rhs.entries_[i];
    }
    return *this;
}

Matrix &Matrix::operator-=(const Matrix &rhs)
{
    require_same_dim(dim_, rhs.dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= rhs.entries_[i];
    }
    return *this;
}

Matrix &Matrix::operator*=(const Scalar &rhs)
{
    for (auto &entry : entries_) {
        entry *= rhs;
    }
    return *this;
}

namespace {

/// A matrix as (integer matrix over Z[sqrt2, i]) / denominator, so products
/// need no gcd work until the final canonicalization.
struct IntegerForm {
    mpz_class denominator{1};
    std::vector<std::array<mpz_class, 4>> parts;
    std::vector<unsigned char> support;  // bit u set iff component u is nonzero
};

IntegerForm integer_form(const Matrix &m)
{
    IntegerForm form;
    const std::size_t count = m.dim() * m.dim();
    for (std::size_t e = 0; e < count; ++e) {
        const Scalar &x = m(e / m.dim(), e % m.dim());
        for (const Rational *q : {&x.a(), &x.b(), &x.c(), &x.d()}) {
            mpz_lcm(form.denominator.get_mpz_t(), form.denominator.get_mpz_t(),
                    q->get_den_mpz_t());
        }
    }
    form.parts.resize(count);
    form.support.assign(count, 0);
    mpz_class scale;
    for (std::size_t e = 0; e < count; ++e) {
        const Scalar &x = m(e / m.dim(), e % m.dim());
        const Rational *components[4] = {&x.a(), &x.b(), &x.c(), &x.d()};
        for (unsigned u = 0; u < 4; ++u) {
            if (sgn(*components[u]) == 0) {
                continue;
            }
            mpz_divexact(scale.get_mpz_t(), form.denominator.get_mpz_t(),
                         components[u]->get_den_mpz_t());
            mpz_mul(form.parts[e][u].get_mpz_t(), scale.get_mpz_t(),
                    components[u]->get_num_mpz_t());
            form.support[e] |= static_cast<unsigned char>(1U << u);
        }
    }
    return form;
}

} // namespace

Matrix operator*(const Matrix &lhs, const Matrix &rhs)
{
    require_same_dim(lhs.dim_, rhs.dim_);
    const std::size_t n = lhs.dim_;
    const IntegerForm l = integer_form(lhs);
    const IntegerForm r = integer_form(rhs);
    const mpz_class denominator = l.denominator * r.denominator;
    Matrix out(n);
    std::array<mpz_class, 4> acc;
    mpz_class term;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (auto &a : acc) {
                a = 0;
            }
            bool any = false;
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t le = i * n + k;
                const std::size_t re = k * n + j;
                if (l.support[le] == 0 || r.support[re] == 0) {
                    continue;
                }
                any = true;
                // Same unit table as Scalar::add_product.
                for (unsigned p = 0; p < 4; ++p) {
                    if ((l.support[le] & (1U << p)) == 0) {
                        continue;
                    }
                    for (unsigned q = 0; q < 4; ++q) {
                        if ((r.support[re] & (1U << q)) == 0) {
                            continue;
                        }
                        mpz_mul(term.get_mpz_t(), l.parts[le][p].get_mpz_t(),
                                r.parts[re][q].get_mpz_t());
                        if ((p & q & 1U) != 0) {
                            mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), 1);
                        }
                        mpz_ptr target = acc[p ^ q].get_mpz_t();
                        if ((p & q & 2U) != 0) {
                            mpz_sub(target, target, term.get_mpz_t());
                        } else {
                            mpz_add(target, target, term.get_mpz_t());
                        }
                    }
                }
            }
            if (!any) {
                continue;
            }
            std::array<Rational, 4> q;
            for (unsigned u = 0; u < 4; ++u) {
                if (sgn(acc[u]) != 0) {
                    q[u] = Rational(acc[u], denominator);
                    q[u].canonicalize();
                }
            }
            out(i, j) = Scalar(std::move(q[0]), std::move(q[1]), std::move(q[2]), std::move(q[3]));
        }
    }
    return out;
}

Vector operator*(const Matrix &lhs, const Vector &rhs)
{
    require_same_dim(lhs.dim_, rhs.dim());
    Vector out(rhs.dim());
    for (std::size_t i = 0; i < lhs.dim_; ++i) {
        for (std::size_t j = 0; j < lhs.dim_; ++j) {
            out[i].add_product(lhs(i, j), rhs[j]);
        }
    }
    return out;
}

std::string Matrix::key() const
{
    std::string out = std::to_string(dim_);
    for (const auto &entry : entries_) {
        for (const auto &part : entry.encode()) {
            out += ',';
            out += part;
        }
    }
    return out;
}

Projector::Projector(Matrix matrix) : matrix_(std::move(matrix))
{
    if (!is_projector(matrix_)) {
        throw Error(ErrorCode::NotAProjector, "matrix is not Hermitian and idempotent");
    }
    rank_ = projector_rank(matrix_);
}

Projector::Projector(Matrix matrix, std::size_t rank, Trusted)
    : matrix_(std::move(matrix)), rank_(rank)
{
}

Projector Projector::identity(std::size_t dim) { return {Matrix::identity(dim), dim, Trusted{}}; }

Projector Projector::zero(std::size_t dim) { return {Matrix::zero(dim), 0, Trusted{}}; }

Projector projector_from_ray(const Vector &v)
{
    if (v.is_zero()) {
        throw Error(ErrorCode::ZeroRay, "cannot project onto the zero vector");
    }
    const Scalar norm = inner_product(v, v);
    return {Matrix::outer(v, v) * norm.inverse(), 1, Projector::Trusted{}};
}

namespace {

Scalar trace_of_product(const Matrix &a, const Matrix &b)
{
    Scalar sum;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            sum.add_product(a(i, j), b(j, i));
        }
    }
    return sum;
}

} // namespace

bool is_projector(const Matrix &m) { return m.is_hermitian() && m * m == m; }

bool commutes(const Projector &p, const Projector &q)
{
    require_same_dim(p.dim(), q.dim());
    // QP = (PQ)^dagger for Hermitian P, Q.
    return (p.matrix() * q.matrix()).is_hermitian();
}

Projector complement(const Projector &p)
{
    return {Matrix::identity(p.dim()) - p.matrix(), p.dim() - p.rank(), Projector::Trusted{}};
}

DecompositionOfIdentity validate_decomposition(std::vector<Matrix> cells)
{
    if (cells.empty()) {
        throw Error(ErrorCode::SumNotIdentity, "empty decomposition");
    }
    const std::size_t dim = cells.front().dim();
    for (const auto &cell : cells) {
        require_same_dim(dim, cell.dim());
    }
    std::vector<Projector> projectors;
    projectors.reserve(cells.size());
    for (std::size_t j = 0; j < cells.size(); ++j) {
        if (!is_projector(cells[j])) {
            throw Error(ErrorCode::NotAProjector, "cell " + std::to_string(j + 1));
        }
        projectors.emplace_back(std::move(cells[j]));
        if (projectors.back().is_zero()) {
            throw Error(ErrorCode::ZeroCell, "cell " + std::to_string(j + 1));
        }
    }
    Matrix sum(dim);
    for (const auto &p : projectors) {
        sum += p.matrix();
    }
    if (!(sum == Matrix::identity(dim))) {
        throw Error(ErrorCode::SumNotIdentity, "cells do not sum to the identity");
    }
    // Projectors summing to I are automatically orthogonal; kept as an
    // explicit check so a broken invariant can never pass silently. For
    // projectors tr(PQ) = |QP|^2, so a zero trace is enough.
    for (std::size_t j = 0; j < projectors.size(); ++j) {
        for (std::size_t k = j + 1; k < projectors.size(); ++k) {
            if (!trace_of_product(projectors[j].matrix(), projectors[k].matrix()).is_zero()) {
                throw Error(ErrorCode::NotOrthogonal,
                            "cells " + std::to_string(j + 1) + " and " + std::to_string(k + 1));
            }
        }
    }
    return {dim, std::move(projectors)};
}

DecompositionOfIdentity validate_decomposition(const std::vector<Projector> &cells)
{
    std::vector<Matrix> matrices;
    matrices.reserve(cells.size());
    for (const auto &p : cells) {
        matrices.push_back(p.matrix());
    }
    return validate_decomposition(std::move(matrices));
}

Projector DecompositionOfIdentity::cell_sum(std::span<const std::size_t> indices) const
{
    Matrix sum(dim_);
    std::size_t rank = 0;
    for (const std::size_t k : indices) {
        sum += cells_.at(k).matrix();
        rank += cells_[k].rank();
    }
    return {std::move(sum), rank, Projector::Trusted{}};
}

DecompositionOfIdentity decomposition_from_basis(std::span<const Vector> basis)
{
    std::vector<Projector> cells;
    cells.reserve(basis.size());
    for (const auto &v : basis) {
        cells.push_back(projector_from_ray(v));
    }
    return validate_decomposition(cells);
}

} // namespace chkit
