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

#include <memory>

#include "chkit/error.hpp"
#include "chkit/events.hpp"
#include "support/models.hpp"

using namespace chkit;

namespace {

EventAlgebra quantum_three()
{
    auto d = std::make_shared<const DecompositionOfIdentity>(decomposition_from_basis(
        std::vector<Vector>{Vector{1, 0, 0}, Vector{0, 1, 1}, Vector{0, 1, -1}}));
    return EventAlgebra::quantum(d);
}

} // namespace

TEST_CASE("cells do not overlap")
{
    const auto algebra = quantum_three();
    CHECK(event_and(algebra.cell(0), algebra.cell(1)).is_zero());
    const Event p = algebra.parse("1,3");
    CHECK(event_or(p, event_complement(p)).is_identity());
}

TEST_CASE("meet of {D1,D2} and {D2,D3} is D2, matching the projector product")
{
    const auto algebra = quantum_three();
    const Event p = algebra.parse("1,2");
    const Event q = algebra.parse("2,3");
    const Event meet = event_and(p, q);
    CHECK(meet == algebra.cell(1));
    CHECK(algebra.realize_projector(meet).matrix() ==
          algebra.realize_projector(p).matrix() * algebra.realize_projector(q).matrix());
}

TEST_CASE("mask operations agree with projector arithmetic")
{
    testing::Rng rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        auto d = std::make_shared<const DecompositionOfIdentity>(testing::random_decomposition(rng, 4, 4));
        const auto algebra = EventAlgebra::quantum(d);
        for (std::uint64_t a = 0; a < 16; ++a) {
            for (std::uint64_t b = 0; b < 16; b += 3) {
                const Event p = algebra.from_bits(a);
                const Event q = algebra.from_bits(b);
                const Matrix mp = algebra.realize_projector(p).matrix();
                const Matrix mq = algebra.realize_projector(q).matrix();
                CHECK(algebra.realize_projector(event_and(p, q)).matrix() == mp * mq);
                CHECK(algebra.realize_projector(event_or(p, q)).matrix() == mp + mq - mp * mq);
                CHECK(algebra.realize_projector(event_complement(p)).matrix() == Matrix::identity(4) - mp);
            }
        }
    }
}

TEST_CASE("event literals")
{
    const auto algebra = EventAlgebra::abstract(4);
    CHECK(algebra.parse("1,3").cells() == std::vector<std::size_t>{0, 2});
    CHECK(algebra.parse("I").is_identity());
    CHECK(algebra.parse("0").is_zero());
    CHECK(algebra.parse(" 3 , 1 ").to_string() == "1,3");
    CHECK(algebra.parse("1,2,3,4").to_string() == "I");
    for (const char *bad : {"", "5", "1,,2", "a", "1,1", "-1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS((void)algebra.parse(bad), Error);
    }
}

TEST_CASE("mixing algebras is refused")
{
    const auto a = EventAlgebra::abstract(3);
    const auto b = EventAlgebra::abstract(3);
    try {
        (void)event_and(a.cell(0), b.cell(0));
        FAIL("expected AlgebraMismatch");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::AlgebraMismatch);
    }
}

TEST_CASE("truth functional values")
{
    const auto algebra = EventAlgebra::abstract(4);
    for (std::size_t k = 0; k < 4; ++k) {
        const TruthFunctional t(algebra, k);
        CHECK(eval_truth(t, algebra.cell(k)) == 1);
        CHECK(eval_truth(t, algebra.identity()) == 1);
        CHECK(eval_truth(t, algebra.zero()) == 0);
        for (std::size_t j = 0; j < 4; ++j) {
            if (j != k) {
                CHECK(eval_truth(t, algebra.cell(j)) == 0);
            }
        }
    }
    CHECK_THROWS_AS(TruthFunctional(algebra, 4), Error);
}

TEST_CASE("verify_homomorphism")
{
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto algebra = EventAlgebra::abstract(n);
        for (const auto &t : enumerate_truth_functionals(algebra)) {
            const auto f = EventFunction::tabulate(t);
            CHECK_FALSE(verify_homomorphism(f).has_value());
            CHECK_FALSE(verify_homomorphism_serial(f).has_value());
        }
    }
    // constant 1 breaks the complement rule first at D_1
    EventFunction ones{3, std::vector<std::uint8_t>(8, 1)};
    const auto v = verify_homomorphism(ones);
    REQUIRE(v.has_value());
    CHECK(v->condition == 2);
    CHECK(v->p == 1);
    // {0, I} with f(I) = 1, f(0) = 0
    CHECK_FALSE(verify_homomorphism(EventFunction{1, {0, 1}}).has_value());
    // f(I) = 0
    CHECK(verify_homomorphism(EventFunction{1, {1, 0}})->condition == 1);
}

TEST_CASE("parallel and serial homomorphism checks agree")
{
    testing::Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
        EventFunction f{n, std::vector<std::uint8_t>(std::size_t{1} << n)};
        // start from a valid functional and flip a few entries
        const TruthFunctional t(EventAlgebra::abstract(n), static_cast<std::size_t>(rng() % n));
        f = EventFunction::tabulate(t);
        const int flips = static_cast<int>(rng() % 3);
        for (int i = 0; i < flips; ++i) {
            auto &bit = f.values[rng() % f.values.size()];
            bit = static_cast<std::uint8_t>(1 - bit);
        }
        const auto a = verify_homomorphism(f);
        const auto b = verify_homomorphism_serial(f);
        REQUIRE(a.has_value() == b.has_value());
        if (a) {
            CHECK(a->condition == b->condition);
            CHECK(a->p == b->p);
            CHECK(a->q == b->q);
        }
    }
}

TEST_CASE("oracle: exactly N of the 2^(2^N) functions survive")
{
    // Counts from an independent brute force: 1 of 4, 2 of 16, 3 of 256, 4 of 65536.
    for (std::size_t n = 1; n <= kOracleMaxCells; ++n) {
        const auto survivors = enumerate_homomorphisms_oracle(n);
        CHECK(survivors.size() == n);
        CHECK(enumerate_homomorphisms_oracle_serial(n).size() == n);
        const auto algebra = EventAlgebra::abstract(n);
        const auto matched = enumerate_truth_functionals_oracle(algebra);
        REQUIRE(matched.size() == n);
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(matched[k] == TruthFunctional(algebra, k));
        }
    }
    try {
        (void)enumerate_homomorphisms_oracle(5);
        FAIL("expected OracleTooLarge");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::OracleTooLarge);
    }
}

TEST_CASE("conditional probability")
{
    const auto algebra = EventAlgebra::abstract(4);
    const std::vector<Rational> uniform(4, Rational(1, 4));
    CHECK(conditional_probability(algebra.identity(), 2, uniform) == 1);
    CHECK(conditional_probability(algebra.cell(2), 2, uniform) == 1);
    CHECK(conditional_probability(algebra.cell(1), 2, uniform) == 0);
    CHECK(conditional_probability(algebra.parse("1,2"), 2, uniform) == 0);

    const std::vector<Rational> degenerate{Rational(1, 2), Rational(1, 2), Rational(0), Rational(0)};
    try {
        (void)conditional_probability(algebra.cell(0), 2, degenerate);
        FAIL("expected ZeroProbabilityCondition");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::ZeroProbabilityCondition);
    }
    const std::vector<Rational> not_normalized(4, Rational(1, 3));
    CHECK_THROWS_AS((void)conditional_probability(algebra.cell(0), 0, not_normalized), Error);
    const std::vector<Rational> short_vector(3, Rational(1, 3));
    CHECK_THROWS_AS((void)conditional_probability(algebra.cell(0), 0, short_vector), Error);
}
