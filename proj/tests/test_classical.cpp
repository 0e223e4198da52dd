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

#include "chkit/classical.hpp"
#include "chkit/error.hpp"
#include "support/models.hpp"

using namespace chkit;

namespace {

CoarseGraining graining(std::size_t n, std::vector<std::vector<std::size_t>> cells)
{
    return {n, std::move(cells)};
}

} // namespace

TEST_CASE("indicators from predicates")
{
    const auto space = PhaseSpace::grid(4, Rational(-2), Rational(2));
    CHECK(space.size() == 25);
    CHECK(indicator_from_predicate(space, [](const PhasePoint &) { return true; }) == Indicator::full(25));
    CHECK(indicator_from_predicate(space, [](const PhasePoint &) { return false; }) == Indicator::empty(25));
}

TEST_CASE("energy below is strict and point-by-point")
{
    // 5x5 grid over [-2,2]^2: energies (x^2+p^2)/2 < 1 only at (0,0) and the
    // four neighbours at distance 1; the diagonal (1,1) has energy exactly 1.
    const auto space = PhaseSpace::grid(4, Rational(-2), Rational(2));
    const Indicator below = energy_below(space, Rational(1));
    CHECK(below.count() == 5);
    CHECK(below.value(space.index_of("2,2")) == 1);
    CHECK(below.value(space.index_of("3,3")) == 0);
    CHECK(below.value(space.index_of("2,3")) == 1);
}

TEST_CASE("the 101 x 101 oscillator grid")
{
    const auto space = PhaseSpace::grid(100, Rational(-2), Rational(2));
    CHECK(space.size() == 10201);
    const std::size_t origin = space.index_of("50,50");
    CHECK(*space.point(origin).x == 0);
    const Indicator below = energy_below(space, Rational(1));
    // Independent count: integer pairs (i, j) in [-50, 50]^2 with i^2 + j^2 < 1250.
    std::size_t expected = 0;
    for (int i = -50; i <= 50; ++i) {
        for (int j = -50; j <= 50; ++j) {
            expected += (i * i + j * j < 1250) ? 1 : 0;
        }
    }
    CHECK(below.count() == expected);
    CHECK(universal_truth(origin, below) == 1);
    CHECK(universal_truth(origin, Indicator::full(space.size())) == 1);
    CHECK(universal_truth(origin, Indicator::empty(space.size())) == 0);
}

TEST_CASE("restricting the universal functional")
{
    const auto whole = graining(6, {{0, 1, 2, 3, 4, 5}});
    CHECK(restrict_universal(4, whole).selected_cell() == 0);
    const auto five = graining(6, {{0}, {1}, {2, 5}, {3}, {4}});
    CHECK(restrict_universal(5, five).selected_cell() == 2);
}

TEST_CASE("restriction agrees with the universal functional on every event")
{
    testing::Rng rng(17);
    const std::size_t n = 200;
    const auto g = CoarseGraining::from_labels(testing::random_labels(rng, n, 8));
    REQUIRE(g.size() == 8);
    for (std::size_t q = 0; q < n; q += 7) {
        const TruthFunctional t = restrict_universal(q, g);
        for (std::uint64_t bits = 0; bits < 256; ++bits) {
            const Event e = g.algebra().from_bits(bits);
            CHECK(eval_truth(t, e) == universal_truth(q, g.algebra().realize_indicator(e)));
        }
    }
}

TEST_CASE("common refinement")
{
    const auto a = graining(4, {{0, 1}, {2, 3}});
    const auto b = graining(4, {{0, 2}, {1, 3}});
    const std::vector<CoarseGraining> ab{a, b};
    const auto joint = common_refinement_classical(ab);
    CHECK(joint.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(joint.cell(k).size() == 1);
        CHECK(joint.cell(k)[0] == k);
    }
    const std::vector<CoarseGraining> aa{a, a};
    CHECK(common_refinement_classical(aa).same_cells(a));
    const std::vector<CoarseGraining> a_whole{a, graining(4, {{0, 1, 2, 3}})};
    CHECK(common_refinement_classical(a_whole).same_cells(a));
    CHECK(is_refinement_classical(joint, a));
    CHECK_FALSE(is_refinement_classical(a, joint));
    CHECK_FALSE(is_refinement_classical(a, b));
}

TEST_CASE("invalid partitions")
{
    const auto code = [](auto fn) {
        try {
            fn();
        } catch (const Error &e) {
            return e.code();
        }
        return ErrorCode::ParseError;
    };
    CHECK(code([] { (void)graining(3, {{0, 1}, {1, 2}}); }) == ErrorCode::InvalidPartition);
    CHECK(code([] { (void)graining(3, {{0, 1}}); }) == ErrorCode::InvalidPartition);
    CHECK(code([] { (void)graining(3, {{0, 1, 2}, {}}); }) == ErrorCode::InvalidPartition);
    CHECK(code([] { (void)graining(3, {{0, 1, 7}}); }) == ErrorCode::UnknownPoint);
    CHECK(code([] { (void)PhaseSpace::from_ids(std::vector<std::string>{"a", "a"}); }) ==
          ErrorCode::InvalidPartition);
    const auto space = PhaseSpace::grid(2, Rational(0), Rational(1));
    CHECK(code([&] { (void)space.index_of("9,9"); }) == ErrorCode::UnknownPoint);
}

TEST_CASE("shared atoms")
{
    // a = {01}{23}{45}, b = {0}{123}{45}: atoms {0123} and {45}
    const auto a = graining(6, {{0, 1}, {2, 3}, {4, 5}});
    const auto b = graining(6, {{0}, {1, 2, 3}, {4, 5}});
    const auto atoms = shared_atoms(a, b);
    REQUIRE(atoms.size() == 2);
    CHECK(atoms[0] == std::vector<std::size_t>{0, 1});
    CHECK(atoms[1] == std::vector<std::size_t>{2});
}

TEST_CASE("every-framework check for classical families")
{
    const auto a = graining(6, {{0, 1}, {2, 3}, {4, 5}});
    const auto b = graining(6, {{0}, {1, 2, 3}, {4, 5}});
    const std::vector<CoarseGraining> gs{a, b};
    // restrictions of one point agree
    for (std::size_t q = 0; q < 6; ++q) {
        const std::vector<std::size_t> sel{a.cell_of(q), b.cell_of(q)};
        CHECK_FALSE(check_every_framework_classical(gs, sel).has_value());
    }
    // a picks {01}, b picks {45}: they disagree on the shared atom {0123}
    const std::vector<std::size_t> clash{0, 2};
    const auto v = check_every_framework_classical(gs, clash);
    REQUIRE(v.has_value());
    CHECK(v->first == 0);
    CHECK(v->second == 1);
    // a picks {01}, b picks {123}: both select inside the same atom, which is fine
    const std::vector<std::size_t> inside{0, 1};
    CHECK_FALSE(check_every_framework_classical(gs, inside).has_value());
}

TEST_CASE("parallel and serial classical checks agree")
{
    testing::Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 50 + rng() % 200;
        std::vector<CoarseGraining> gs;
        std::vector<std::size_t> sel;
        const std::size_t q = rng() % n;
        for (int i = 0; i < 8; ++i) {
            gs.push_back(CoarseGraining::from_labels(testing::random_labels(rng, n, 2 + rng() % 6)));
            // mostly consistent selections, occasionally a random one
            sel.push_back(rng() % 4 == 0 ? rng() % gs.back().size() : gs.back().cell_of(q));
        }
        const auto a = check_every_framework_classical(gs, sel);
        const auto b = check_every_framework_classical_serial(gs, sel);
        REQUIRE(a.has_value() == b.has_value());
        if (a) {
            CHECK(a->first == b->first);
            CHECK(a->second == b->second);
            CHECK(a->atom_cells == b->atom_cells);
        }
    }
}
