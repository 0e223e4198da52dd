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

#include "doctest.h"

#include "chkit/error.hpp"
#include "chkit/hilbert.hpp"
#include "support/models.hpp"

using namespace chkit;

namespace {

const Scalar kHalf = Scalar::ratio(1, 2);

Matrix px_matrix() { return Matrix(2, {kHalf, kHalf, kHalf, kHalf}); }
Matrix pz_matrix() { return Matrix(2, {1, 0, 0, 0}); }

ErrorCode code_of(const auto &fn)
{
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected an exception");
    return ErrorCode::ParseError;
}

} // namespace

TEST_CASE("projector_from_ray")
{
    CHECK(projector_from_ray(Vector{1, 0}).matrix() == Matrix(2, {1, 0, 0, 0}));
    CHECK(projector_from_ray(Vector{1, 1}).matrix() == px_matrix());
    CHECK(projector_from_ray(Vector{3, 3}).matrix() == px_matrix());
    CHECK(code_of([] { (void)projector_from_ray(Vector{0, 0}); }) == ErrorCode::ZeroRay);
    // complex ray: (1, i) gives [[1/2, -i/2], [i/2, 1/2]]
    const Scalar i = Scalar::imag_unit();
    CHECK(projector_from_ray(Vector{1, i}).matrix() == Matrix(2, {kHalf, -i * kHalf, i * kHalf, kHalf}));
}

TEST_CASE("is_projector")
{
    CHECK(is_projector(Matrix::identity(3)));
    CHECK_FALSE(is_projector(Matrix(2, {0, 1, 0, 0})));
    CHECK(is_projector(px_matrix()));
    CHECK_FALSE(is_projector(Matrix(2, {2, 0, 0, 0})));
    CHECK(code_of([] { (void)Projector(Matrix(2, {0, 1, 0, 0})); }) == ErrorCode::NotAProjector);
}

TEST_CASE("commutes")
{
    const Projector px(px_matrix());
    const Projector pz(pz_matrix());
    CHECK_FALSE(commutes(px, pz));
    CHECK(commutes(px, Projector::identity(2)));
    CHECK(commutes(px, px));
    CHECK(code_of([&] { (void)commutes(px, Projector::identity(3)); }) == ErrorCode::DimMismatch);
}

TEST_CASE("complement")
{
    CHECK(complement(Projector(pz_matrix())).matrix() == Matrix(2, {0, 0, 0, 1}));
    CHECK(complement(Projector::identity(2)).is_zero());
    CHECK(complement(Projector(px_matrix())).matrix() == Matrix(2, {kHalf, -kHalf, -kHalf, kHalf}));
    CHECK(complement(Projector(px_matrix())) == projector_from_ray(Vector{1, -1}));
}

TEST_CASE("validate_decomposition")
{
    const Projector px(px_matrix());
    CHECK(validate_decomposition(std::vector<Projector>{px, complement(px)}).size() == 2);
    CHECK(validate_decomposition(std::vector<Matrix>{Matrix::identity(4)}).size() == 1);
    CHECK(code_of([] { (void)validate_decomposition(std::vector<Matrix>{px_matrix(), pz_matrix()}); }) ==
          ErrorCode::SumNotIdentity);
    CHECK(code_of([] { (void)validate_decomposition(std::vector<Matrix>{Matrix(2, {0, 1, 0, 0}), Matrix::identity(2)}); }) ==
          ErrorCode::NotAProjector);
    CHECK(code_of([] { (void)validate_decomposition(std::vector<Matrix>{Matrix::identity(2), Matrix::zero(2)}); }) ==
          ErrorCode::ZeroCell);
    CHECK(code_of([] { (void)validate_decomposition(std::vector<Matrix>{Matrix::identity(2), Matrix::identity(3)}); }) ==
          ErrorCode::DimMismatch);
}

TEST_CASE("rank is the trace")
{
    const auto d = decomposition_from_basis(std::vector<Vector>{Vector{1, 0, 0}, Vector{0, 1, 1}, Vector{0, 1, -1}});
    CHECK(d.size() == 3);
    const std::size_t both[] = {1, 2};
    CHECK(d.cell_sum(both).rank() == 2);
    CHECK(d.cell_sum(both).matrix() == Matrix(3, {0, 0, 0, 0, 1, 0, 0, 0, 1}));
}

TEST_CASE("projective equality")
{
    const Scalar i = Scalar::imag_unit();
    CHECK(projectively_equal(Vector{1, 1}, Vector{-1, -1}));
    CHECK(projectively_equal(Vector{1, i}, Vector{i, -1}));
    CHECK_FALSE(projectively_equal(Vector{1, i}, Vector{1, -i}));
    CHECK(projectively_equal(Vector{0, Scalar::sqrt2()}, Vector{0, 1}));
}

TEST_CASE("random decompositions are valid and Householder matrices are unitary")
{
    testing::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t dim = 2 + static_cast<std::size_t>(trial % 4);
        const Matrix u = testing::random_unitary(rng, dim);
        CHECK(u * u.adjoint() == Matrix::identity(dim));
        const auto d = testing::random_decomposition(rng, dim, 1 + static_cast<std::size_t>(trial) % dim);
        Matrix sum = Matrix::zero(dim);
        std::size_t rank = 0;
        for (const auto &cell : d.cells()) {
            sum += cell.matrix();
            rank += cell.rank();
        }
        CHECK(sum == Matrix::identity(dim));
        CHECK(rank == dim);
    }
}

TEST_CASE("matrix product matches the entrywise definition")
{
    testing::Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        std::vector<Scalar> a_entries;
        std::vector<Scalar> b_entries;
        for (std::size_t e = 0; e < n * n; ++e) {
            a_entries.push_back(rng() % 3 == 0 ? Scalar(0) : testing::random_scalar(rng, 9, 12));
            b_entries.push_back(rng() % 3 == 0 ? Scalar(0) : testing::random_scalar(rng, 9, 12));
        }
        const Matrix a(n, a_entries);
        const Matrix b(n, b_entries);
        const Matrix product = a * b;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Scalar expected(0);
                for (std::size_t k = 0; k < n; ++k) {
                    expected = expected + a(i, k) * b(k, j);
                }
                CHECK(product(i, j) == expected);
            }
        }
    }
}
