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
#include "chkit/exactnum.hpp"
#include "support/models.hpp"

using namespace chkit;

TEST_CASE("sqrt2 squared is 2")
{
    CHECK(Scalar::sqrt2() * Scalar::sqrt2() == Scalar(2));
}

TEST_CASE("conjugation flips the imaginary unit")
{
    CHECK(Scalar::imag_unit().conj() == -Scalar::imag_unit());
    CHECK(Scalar::imag_unit() * Scalar::imag_unit() == Scalar(-1));
}

TEST_CASE("inverse of 1 + sqrt2 is sqrt2 - 1")
{
    const Scalar x = Scalar(1) + Scalar::sqrt2();
    CHECK(x.inverse() == Scalar::sqrt2() - Scalar(1));
    CHECK((x * x.inverse()).is_one());
}

TEST_CASE("inverses with imaginary parts")
{
    // 1/(1+i) = 1/2 - i/2 ; 1/(sqrt2 + i) = (sqrt2 - i)/3
    const Scalar i = Scalar::imag_unit();
    CHECK((Scalar(1) + i).inverse() == Scalar::ratio(1, 2) - Scalar::ratio(1, 2) * i);
    CHECK((Scalar::sqrt2() + i).inverse() == (Scalar::sqrt2() - i) * Scalar::ratio(1, 3));
}

TEST_CASE("mixed product")
{
    // (1/2 + 1/2 sqrt2 i)(3 - sqrt2) = 3/2 - 1/2 sqrt2 + (-1 + 3/2 sqrt2) i
    const Scalar lhs(Rational(1, 2), Rational(0), Rational(0), Rational(1, 2));
    const Scalar rhs(Rational(3), Rational(-1), Rational(0), Rational(0));
    CHECK(lhs * rhs == Scalar(Rational(3, 2), Rational(-1, 2), Rational(-1), Rational(3, 2)));
}

TEST_CASE("division by zero throws")
{
    CHECK_THROWS_AS((void)Scalar(0).inverse(), Error);
    try {
        (void)(Scalar(1) / Scalar(0));
        FAIL("expected DivisionByZero");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::DivisionByZero);
    }
}

TEST_CASE("is_zero is exact")
{
    CHECK(Scalar(0).is_zero());
    CHECK_FALSE(Scalar(Rational(1, 1000000000)).is_zero());
    CHECK((Scalar::sqrt2() * Scalar::sqrt2() - Scalar(2)).is_zero());
}

TEST_CASE("real_sign compares a^2 with 2 b^2")
{
    CHECK(Scalar(Rational(3), Rational(-2), Rational(0), Rational(0)).real_sign() == 1);   // 3 > 2.83
    CHECK(Scalar(Rational(-3), Rational(2), Rational(0), Rational(0)).real_sign() == -1);
    CHECK(Scalar(Rational(1), Rational(-1), Rational(0), Rational(0)).real_sign() == -1);  // 1 < 1.41
    CHECK(Scalar(0).real_sign() == 0);
}

TEST_CASE("predicates")
{
    CHECK(Scalar(Rational(2, 3)).is_rational());
    CHECK_FALSE(Scalar::sqrt2().is_rational());
    CHECK(Scalar::sqrt2().is_real());
    CHECK_FALSE(Scalar::imag_unit().is_real());
    CHECK(Scalar(1).is_one());
}

TEST_CASE("text encoding round trips")
{
    const Scalar s(Rational(1, 2), Rational(-3), Rational(0), Rational(7, 5));
    const auto parts = s.encode();
    CHECK(parts[0] == "1/2");
    CHECK(parts[1] == "-3");
    CHECK(parts[2] == "0");
    CHECK(parts[3] == "7/5");
    CHECK(Scalar::decode(parts) == s);
    CHECK(Scalar::decode({"2/4", "0", "0", "0"}) == Scalar::ratio(1, 2));
}

TEST_CASE("parse_rational rejects malformed text")
{
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("12") == Rational(12));
    for (const char *bad : {"", "1/0", "x", "1/", "/2", "1.5", "1/2/3"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS((void)parse_rational(bad), Error);
    }
}

TEST_CASE("field axioms on random scalars")
{
    testing::Rng rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const Scalar a = testing::random_scalar(rng);
        const Scalar b = testing::random_scalar(rng);
        const Scalar c = testing::random_scalar(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a * a.conj()).is_real());
        CHECK(a.norm_squared().real_sign() >= 0);
        if (!a.is_zero()) {
            CHECK((a * a.inverse()).is_one());
            CHECK((b / a) * a == b);
        }
    }
}
