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

#include <cmath>

#include "chkit/error.hpp"
#include "chkit/io.hpp"
#include "float_import.hpp"
#include "support/models.hpp"

using namespace chkit;
using io::Json;

namespace {

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

TEST_CASE("scalar encoding")
{
    const Scalar s(Rational(-1, 3), Rational(2), Rational(0), Rational(5, 7));
    CHECK(io::scalar_to_json(s) == Json::array({"-1/3", "2", "0", "5/7"}));
    CHECK(io::scalar_from_json(io::scalar_to_json(s)) == s);
    CHECK(code_of([] { (void)io::scalar_from_json(Json::array({"1", "0", "0"})); }) == ErrorCode::ParseError);
    CHECK(code_of([] { (void)io::scalar_from_json(Json::array({1, 0, 0, 0})); }) == ErrorCode::ParseError);
}

TEST_CASE("decomposition round trip and semantic errors")
{
    testing::Rng rng(2);
    const auto d = testing::random_decomposition(rng, 4, 3);
    const Json j = io::decomposition_to_json(d);
    const auto back = io::decomposition_from_json(j);
    REQUIRE(back.size() == d.size());
    for (std::size_t k = 0; k < d.size(); ++k) {
        CHECK(back.cell(k) == d.cell(k));
        CHECK(j["cells"][k]["rank"] == d.cell(k).rank());
    }
    Json wrong_rank = j;
    wrong_rank["cells"][0]["rank"] = 4;
    CHECK(code_of([&] { (void)io::decomposition_from_json(wrong_rank); }) == ErrorCode::ParseError);
    Json missing = j;
    missing["cells"].erase(0);
    CHECK(code_of([&] { (void)io::decomposition_from_json(missing); }) == ErrorCode::SumNotIdentity);
    Json wrong_dim = j;
    wrong_dim["dim"] = 3;
    CHECK(code_of([&] { (void)io::decomposition_from_json(wrong_dim); }) == ErrorCode::DimMismatch);
}

TEST_CASE("framework set and family round trip")
{
    const auto set = s0s1s2_frameworks();
    const auto back = io::framework_set_from_json(io::framework_set_to_json(set));
    CHECK(back.size() == 3);
    CHECK(back.find("S2").cell(1) == set.find("S2").cell(1));

    TruthAssignmentFamily family;
    family.selected = {{"S1", 1}, {"S2", 0}};
    const Json j = io::family_to_json(family);
    CHECK(j["assignments"]["S1"] == 2);
    CHECK(io::family_from_json(j).selected == family.selected);
    CHECK(code_of([] { (void)io::family_from_json(Json{{"assignments", {{"S1", 0}}}}); }) == ErrorCode::ParseError);
}

TEST_CASE("partition")
{
    const Json j{{"points", {"a", "b", "c"}}, {"cells", Json::array({Json::array({"c", "a"}), Json::array({"b"})})}};
    const auto loaded = io::partition_from_json(j);
    CHECK(loaded.graining.size() == 2);
    CHECK(loaded.graining.cell_of(loaded.space.index_of("c")) == 0);
    const Json back = io::partition_to_json(loaded.space, loaded.graining);
    CHECK(io::partition_from_json(back).graining.size() == 2);
    const Json unknown{{"points", {"a", "b"}}, {"cells", Json::array({Json::array({"a", "q"})})}};
    CHECK(code_of([&] { (void)io::partition_from_json(unknown); }) == ErrorCode::UnknownPoint);
    const Json overlap{{"points", {"a", "b"}}, {"cells", Json::array({Json::array({"a", "b"}), Json::array({"b"})})}};
    CHECK(code_of([&] { (void)io::partition_from_json(overlap); }) == ErrorCode::InvalidPartition);
}

TEST_CASE("ray set round trip")
{
    for (const char *name : {"cabello18", "peres24", "s1s2-dim3", "spin-dirs(4)"}) {
        const auto rs = builtin_dataset(name);
        const auto back = io::rayset_from_json(io::rayset_to_json(rs));
        REQUIRE(back.size() == rs.size());
        CHECK(back.contexts() == rs.contexts());
        for (std::size_t i = 0; i < rs.size(); ++i) {
            CHECK(back.ray(i) == rs.ray(i));
            CHECK(back.id(i) == rs.id(i));
        }
    }
}

TEST_CASE("float import snaps near field values and refuses the rest")
{
    using cli::snap_real;
    CHECK(snap_real(0.5, 1e-9) == Scalar::ratio(1, 2));
    CHECK(snap_real(-1.0 / 3.0, 1e-9) == Scalar::ratio(-1, 3));
    CHECK(snap_real(1.0 / std::sqrt(2.0), 1e-9) == Scalar::sqrt2() * Scalar::ratio(1, 2));
    CHECK_FALSE(snap_real(M_PI, 1e-9).has_value());
    CHECK_FALSE(snap_real(0.70710678, 1e-9).has_value());
    CHECK(snap_real(0.70710678, 1e-6) == Scalar::sqrt2() * Scalar::ratio(1, 2));

    const double r = 1.0 / std::sqrt(2.0);
    const Json doc{{"dim", 2},
                   {"rays", {{{"id", "p"}, {"vector", {r, Json::array({0.0, r})}}},
                             {{"id", "m"}, {"vector", {r, Json::array({0.0, -r})}}}}},
                   {"contexts", Json::array({Json::array({"p", "m"})})}};
    CHECK(cli::has_float_scalars(doc));
    const auto rs = io::rayset_from_json(cli::snap_rayset(doc, 1e-9));
    CHECK(projectively_equal(rs.ray(0), Vector{1, Scalar::imag_unit()}));
    Json noisy = doc;
    noisy["rays"][0]["vector"][0] = r + 1e-6;
    CHECK(code_of([&] { (void)cli::snap_rayset(noisy, 1e-9); }) == ErrorCode::ParseError);
}
