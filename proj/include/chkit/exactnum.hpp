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

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chkit {

/// Arbitrary-precision rational. GMP keeps it in lowest terms with a
/// positive denominator as long as every value goes through canonicalize().
using Rational = mpq_class;

/// Parses "p/q" or "p" (optionally signed). Throws ParseError on anything
/// else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Inverse of parse_rational; integers print without a denominator.
std::string format_rational(const Rational &value);

/**
 * @brief Exact element of Q(sqrt2, i).
 *
 * Holds a + b*sqrt2 + (c + d*sqrt2)*i with rational a, b, c, d. Every
 * constructor and operator returns canonical components, so equality is
 * plain componentwise equality.
 */
class Scalar {
  public:
    Scalar() = default;
    Scalar(long value); // NOLINT(google-explicit-constructor): integer literals read naturally
    explicit Scalar(Rational real);
    Scalar(Rational a, Rational b, Rational c, Rational d);

    static Scalar sqrt2();
    static Scalar imag_unit();
    static Scalar ratio(long numerator, long denominator);

    [[nodiscard]] const Rational &a() const noexcept { return a_; }
    [[nodiscard]] const Rational &b() const noexcept { return b_; }
    [[nodiscard]] const Rational &c() const noexcept { return c_; }
    [[nodiscard]] const Rational &d() const noexcept { return d_; }

    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] bool is_one() const noexcept;
    /// True when b = c = d = 0.
    [[nodiscard]] bool is_rational() const noexcept;
    /// True when c = d = 0.
    [[nodiscard]] bool is_real() const noexcept;

    /// Sign (-1, 0, +1) of a real element a + b*sqrt2. Precondition: is_real().
    [[nodiscard]] int real_sign() const;

    [[nodiscard]] Scalar conj() const;
    void conjugate_in_place();
    /// *this += lhs * rhs (or conj(lhs) * rhs) without temporaries.
    void add_product(const Scalar &lhs, const Scalar &rhs, bool conjugate_lhs = false);
    /// |z|^2 = z * conj(z); always real and non-negative.
    [[nodiscard]] Scalar norm_squared() const;
    /// Throws DivisionByZero for zero.
    [[nodiscard]] Scalar inverse() const;

    Scalar &operator+=(const Scalar &rhs);
    Scalar &operator-=(const Scalar &rhs);
    Scalar &operator*=(const Scalar &rhs);
    Scalar &operator/=(const Scalar &rhs);

    friend Scalar operator+(Scalar lhs, const Scalar &rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar &rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar &rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar &rhs) { return lhs /= rhs; }
    Scalar operator-() const;

    friend bool operator==(const Scalar &lhs, const Scalar &rhs)
    {
        return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && lhs.c_ == rhs.c_ && lhs.d_ == rhs.d_;
    }

    /// Lexicographic order on (a, b, c, d); used only for canonical sorting.
    [[nodiscard]] bool structurally_less(const Scalar &rhs) const;

    /// Wire form ["a","b","c","d"].
    [[nodiscard]] std::array<std::string, 4> encode() const;
    static Scalar decode(const std::array<std::string, 4> &parts);

    /// Compact human form, e.g. "1/2 + 1/2*sqrt2*i".
    [[nodiscard]] std::string to_string() const;

  private:
    void canonicalize();

    Rational a_{0}, b_{0}, c_{0}, d_{0};
};

} // namespace chkit
