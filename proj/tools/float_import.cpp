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

#include "float_import.hpp"

#include <cmath>
#include <sstream>

#include "chkit/error.hpp"

namespace chkit::cli {

namespace {

constexpr long kMaxDenominator = 10'000;

/// Best rational approximation by continued fractions.
std::optional<Rational> nearest_rational(double x, double tol)
{
    if (!std::isfinite(x)) {
        return std::nullopt;
    }
    // Convergents h/k of x.
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double rest = x;
    for (int iter = 0; iter < 64; ++iter) {
        const double a = std::floor(rest);
        if (std::fabs(a) > 1e15) {
            break;
        }
        const long ai = static_cast<long>(a);
        const long h2 = ai * h1 + h0;
        const long k2 = ai * k1 + k0;
        if (k2 > kMaxDenominator) {
            break;
        }
        h0 = h1, h1 = h2, k0 = k1, k1 = k2;
        if (std::fabs(x - static_cast<double>(h1) / static_cast<double>(k1)) <= tol) {
            Rational r(h1, k1);
            r.canonicalize();
            return r;
        }
        const double frac = rest - a;
        if (frac == 0.0) {
            break;
        }
        rest = 1.0 / frac;
    }
    return std::nullopt;
}

bool is_float_scalar(const io::Json &j)
{
    return j.is_number() || (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number());
}

std::string describe(double x)
{
    std::ostringstream out;
    out.precision(17);
    out << x;
    return out.str();
}

Scalar snap_or_throw(double x, double tol, const std::string &where)
{
    if (auto s = snap_real(x, tol)) {
        return *s;
    }
    throw Error(ErrorCode::ParseError, where + ": " + describe(x) +
                                           " is not within the snap tolerance of a p/q or "
                                           "p/q*sqrt2 value");
}

} // namespace

std::optional<Scalar> snap_real(double x, double tol)
{
    // Irrationals such as sqrt2/2 also have rational approximants within tol
    // at large denominators, so both forms are tried and the simpler wins.
    const auto r = nearest_rational(x, tol);
    // Residual of b*sqrt2 is sqrt2 times the residual of b.
    const auto b = nearest_rational(x / std::sqrt(2.0), tol / std::sqrt(2.0));
    if (b && (!r || cmp(b->get_den(), r->get_den()) < 0)) {
        return Scalar(Rational(0), *b, Rational(0), Rational(0));
    }
    if (r) {
        return Scalar(*r);
    }
    return std::nullopt;
}

bool has_float_scalars(const io::Json &doc)
{
    if (!doc.is_object() || !doc.contains("rays") || !doc["rays"].is_array()) {
        return false;
    }
    for (const auto &ray : doc["rays"]) {
        if (!ray.is_object() || !ray.contains("vector") || !ray["vector"].is_array()) {
            continue;
        }
        for (const auto &entry : ray["vector"]) {
            if (is_float_scalar(entry)) {
                return true;
            }
        }
    }
    return false;
}

io::Json snap_rayset(const io::Json &doc, double tol)
{
    if (!(tol >= 0.0)) {
        throw Error(ErrorCode::ParseError, "snap tolerance must be non-negative");
    }
    io::Json out = doc;
    if (!out.is_object() || !out.contains("rays") || !out["rays"].is_array()) {
        return out;
    }
    for (auto &ray : out["rays"]) {
        if (!ray.is_object() || !ray.contains("vector") || !ray["vector"].is_array()) {
            continue;
        }
        const std::string where = "ray '" + (ray.contains("id") ? ray["id"].dump() : "?") + "'";
        for (auto &entry : ray["vector"]) {
            if (entry.is_number()) {
                entry = io::scalar_to_json(snap_or_throw(entry.get<double>(), tol, where));
            } else if (is_float_scalar(entry)) {
                const Scalar re = snap_or_throw(entry[0].get<double>(), tol, where);
                const Scalar im = snap_or_throw(entry[1].get<double>(), tol, where);
                entry = io::scalar_to_json(re + im * Scalar::imag_unit());
            }
        }
    }
    return out;
}

} // namespace chkit::cli
