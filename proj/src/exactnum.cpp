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

#include "chkit/exactnum.hpp"

#include <cctype>
#include <tuple>
#include <utility>

#include "chkit/error.hpp"

namespace chkit {

namespace {

bool is_integer_literal(std::string_view text)
{
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        ++pos;
    }
    if (pos == text.size()) {
        return false;
    }
    for (; pos < text.size(); ++pos) {
        if (std::isdigit(static_cast<unsigned char>(text[pos])) == 0) {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view text)
{
    if (!is_integer_literal(text)) {
        throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
    }
    if (text.front() == '+') {
        text.remove_prefix(1);
    }
    return mpz_class(std::string(text), 10);
}

void append_term(std::string &out, const Rational &coef, std::string_view unit)
{
    if (coef == 0) {
        return;
    }
    const bool negative = coef < 0;
    const Rational magnitude = negative ? Rational(-coef) : coef;
    if (out.empty()) {
        out += negative ? "-" : "";
    } else {
        out += negative ? " - " : " + ";
    }
    if (unit.empty()) {
        out += format_rational(magnitude);
    } else if (magnitude == 1) {
        out += unit;
    } else {
        out += format_rational(magnitude);
        out += '*';
        out += unit;
    }
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    Rational value;
    if (slash == std::string_view::npos) {
        value = Rational(parse_integer(text));
    } else {
        const mpz_class num = parse_integer(text.substr(0, slash));
        const std::string_view den_text = text.substr(slash + 1);
        if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+') {
            throw Error(ErrorCode::ParseError, "bad denominator in '" + std::string(text) + "'");
        }
        const mpz_class den = parse_integer(den_text);
        if (den == 0) {
            throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
        }
        value = Rational(num, den);
    }
    value.canonicalize();
    return value;
}

std::string format_rational(const Rational &value)
{
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Scalar::Scalar(long value) : a_(value) {}

Scalar::Scalar(Rational real) : a_(std::move(real)) { canonicalize(); }

Scalar::Scalar(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
{
    canonicalize();
}

Scalar Scalar::sqrt2() { return {0, 1, 0, 0}; }

Scalar Scalar::imag_unit() { return {0, 0, 1, 0}; }

Scalar Scalar::ratio(long numerator, long denominator)
{
    if (denominator == 0) {
        throw Error(ErrorCode::DivisionByZero, "ratio with zero denominator");
    }
    return Scalar(Rational(numerator, denominator));
}

void Scalar::canonicalize()
{
    a_.canonicalize();
    b_.canonicalize();
    c_.canonicalize();
    d_.canonicalize();
}

bool Scalar::is_zero() const noexcept { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }

bool Scalar::is_one() const noexcept { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 0; }

bool Scalar::is_rational() const noexcept { return b_ == 0 && c_ == 0 && d_ == 0; }

bool Scalar::is_real() const noexcept { return c_ == 0 && d_ == 0; }

int Scalar::real_sign() const
{
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sa == 0) {
        return sb;
    }
    if (sb == 0 || sa == sb) {
        return sa;
    }
    // Opposite signs: compare a^2 against 2b^2.
    const Rational lhs = a_ * a_;
    const Rational rhs = 2 * b_ * b_;
    if (lhs == rhs) {
        return 0; // unreachable for rational a, b: sqrt2 is irrational
    }
    return lhs > rhs ? sa : sb;
}

Scalar Scalar::conj() const { return {a_, b_, -c_, -d_}; }

void Scalar::conjugate_in_place()
{
    mpq_neg(c_.get_mpq_t(), c_.get_mpq_t());
    mpq_neg(d_.get_mpq_t(), d_.get_mpq_t());
}

Scalar Scalar::norm_squared() const { return *this * conj(); }

Scalar Scalar::inverse() const
{
    if (is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    }
    // 1/z = conj(z) / |z|^2 and 1/(s + t*sqrt2) = (s - t*sqrt2) / (s^2 - 2t^2).
    const Scalar norm = norm_squared();
    const Rational denom = norm.a_ * norm.a_ - 2 * norm.b_ * norm.b_;
    const Scalar inv_norm(norm.a_ / denom, -norm.b_ / denom, 0, 0);
    return conj() * inv_norm;
}

Scalar &Scalar::operator+=(const Scalar &rhs)
{
    a_ += rhs.a_;
    b_ += rhs.b_;
    c_ += rhs.c_;
    d_ += rhs.d_;
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &rhs)
{
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    c_ -= rhs.c_;
    d_ -= rhs.d_;
    return *this;
}

void Scalar::add_product(const Scalar &lhs, const Scalar &rhs, bool conjugate_lhs)
{
    // Components are indexed by basis unit: bit 0 is sqrt2, bit 1 is i.
    // Units multiply by xor; sqrt2*sqrt2 gives a factor 2 and i*i a factor
    // -1. Zero components are skipped, which is most of them in practice.
    const Rational *l[4] = {&lhs.a_, &lhs.b_, &lhs.c_, &lhs.d_};
    const Rational *r[4] = {&rhs.a_, &rhs.b_, &rhs.c_, &rhs.d_};
    Rational *out[4] = {&a_, &b_, &c_, &d_};
    Rational term;
    for (unsigned p = 0; p < 4; ++p) {
        if (sgn(*l[p]) == 0) {
            continue;
        }
        const bool lhs_negated = conjugate_lhs && (p & 2U) != 0;
        for (unsigned q = 0; q < 4; ++q) {
            if (sgn(*r[q]) == 0) {
                continue;
            }
            mpq_mul(term.get_mpq_t(), l[p]->get_mpq_t(), r[q]->get_mpq_t());
            if ((p & q & 1U) != 0) {
                mpq_mul_2exp(term.get_mpq_t(), term.get_mpq_t(), 1);
            }
            mpq_ptr target = out[p ^ q]->get_mpq_t();
            if (((p & q & 2U) != 0) != lhs_negated) {
                mpq_sub(target, target, term.get_mpq_t());
            } else {
                mpq_add(target, target, term.get_mpq_t());
            }
        }
    }
}

Scalar &Scalar::operator*=(const Scalar &rhs)
{
    Scalar product;
    product.add_product(*this, rhs);
    *this = std::move(product);
    return *this;
}

Scalar &Scalar::operator/=(const Scalar &rhs) { return *this *= rhs.inverse(); }

Scalar Scalar::operator-() const { return {-a_, -b_, -c_, -d_}; }

bool Scalar::structurally_less(const Scalar &rhs) const
{
    return std::tie(a_, b_, c_, d_) < std::tie(rhs.a_, rhs.b_, rhs.c_, rhs.d_);
}

std::array<std::string, 4> Scalar::encode() const
{
    return {format_rational(a_), format_rational(b_), format_rational(c_), format_rational(d_)};
}

Scalar Scalar::decode(const std::array<std::string, 4> &parts)
{
    return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]),
            parse_rational(parts[3])};
}

std::string Scalar::to_string() const
{
    std::string out;
    append_term(out, a_, "");
    append_term(out, b_, "sqrt2");
    append_term(out, c_, "i");
    append_term(out, d_, "sqrt2*i");
    return out.empty() ? "0" : out;
}

} // namespace chkit
