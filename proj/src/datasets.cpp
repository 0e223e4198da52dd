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

#include <array>
#include <charconv>

#include "chkit/error.hpp"
#include "chkit/nogo.hpp"

namespace chkit {

namespace {

RaySet from_table(std::size_t dim, const std::vector<std::vector<Vector>> &contexts)
{
    RawRaySet raw;
    raw.dim = dim;
    for (const auto &context : contexts) {
        std::vector<std::string> names;
        for (const auto &v : context) {
            std::string id;
            for (const auto &ray : raw.rays) {
                if (projectively_equal(ray.vector, v)) {
                    id = ray.id;
                    break;
                }
            }
            if (id.empty()) {
                id = "r" + std::to_string(raw.rays.size() + 1);
                raw.rays.push_back({id, v});
            }
            names.push_back(id);
        }
        raw.contexts.push_back(std::move(names));
    }
    return validate_rayset(raw);
}

RaySet cabello18()
{
    using V = Vector;
    return from_table(4, {
                             {V{0, 0, 0, 1}, V{0, 0, 1, 0}, V{1, 1, 0, 0}, V{1, -1, 0, 0}},
                             {V{0, 0, 0, 1}, V{0, 1, 0, 0}, V{1, 0, 1, 0}, V{1, 0, -1, 0}},
                             {V{1, -1, 1, -1}, V{1, -1, -1, 1}, V{1, 1, 0, 0}, V{0, 0, 1, 1}},
                             {V{1, -1, 1, -1}, V{1, 1, 1, 1}, V{1, 0, -1, 0}, V{0, 1, 0, -1}},
                             {V{0, 0, 1, 0}, V{0, 1, 0, 0}, V{1, 0, 0, 1}, V{1, 0, 0, -1}},
                             {V{1, -1, -1, 1}, V{1, 1, 1, 1}, V{1, 0, 0, -1}, V{0, 1, -1, 0}},
                             {V{1, 1, -1, 1}, V{1, 1, 1, -1}, V{1, -1, 0, 0}, V{0, 0, 1, 1}},
                             {V{1, 1, -1, 1}, V{-1, 1, 1, 1}, V{1, 0, 1, 0}, V{0, 1, 0, -1}},
                             {V{1, 1, 1, -1}, V{-1, 1, 1, 1}, V{1, 0, 0, 1}, V{0, 1, -1, 0}},
                         });
}

Matrix kron(const Matrix &a, const Matrix &b)
{
    const std::size_t n = a.dim() * b.dim();
    Matrix out(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            for (std::size_t k = 0; k < b.dim(); ++k) {
                for (std::size_t l = 0; l < b.dim(); ++l) {
                    out(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

/// First nonzero column, scaled so its first nonzero entry is 1.
Vector range_ray(const Matrix &m)
{
    for (std::size_t col = 0; col < m.dim(); ++col) {
        Vector v(m.dim());
        for (std::size_t row = 0; row < m.dim(); ++row) {
            v[row] = m(row, col);
        }
        if (v.is_zero()) {
            continue;
        }
        std::size_t lead = 0;
        while (v[lead].is_zero()) {
            ++lead;
        }
        const Scalar scale = v[lead].inverse();
        for (std::size_t row = 0; row < v.dim(); ++row) {
            v[row] *= scale;
        }
        return v;
    }
    throw Error(ErrorCode::ZeroRay, "projector has no range");
}

RaySet peres24()
{
    const Scalar i = Scalar::imag_unit();
    const Matrix id = Matrix::identity(2);
    const Matrix x(2, {0, 1, 1, 0});
    const Matrix y(2, {0, -i, i, 0});
    const Matrix z(2, {1, 0, 0, -1});

    // Each line of the square is a commuting triple; two of its operators
    // already fix the joint eigenbasis. Rows first, then columns.
    const std::array<std::pair<Matrix, Matrix>, 6> lines = {{
        {kron(x, id), kron(id, x)},
        {kron(id, y), kron(y, id)},
        {kron(x, y), kron(y, x)},
        {kron(x, id), kron(id, y)},
        {kron(id, x), kron(y, id)},
        {kron(x, x), kron(y, y)},
    }};
    const Matrix id4 = Matrix::identity(4);
    std::vector<std::vector<Vector>> contexts;
    for (const auto &[a, b] : lines) {
        std::vector<Vector> context;
        for (const long s1 : {1L, -1L}) {
            for (const long s2 : {1L, -1L}) {
                context.push_back(range_ray((id4 + a * Scalar(s1)) * (id4 + b * Scalar(s2))));
            }
        }
        contexts.push_back(std::move(context));
    }
    return from_table(4, contexts);
}

RaySet s1s2_dim3()
{
    RawRaySet raw;
    raw.dim = 3;
    raw.rays = {{"A", Vector{1, 0, 0}},
                {"B", Vector{0, 1, 0}},
                {"C", Vector{0, 0, 1}},
                {"D", Vector{0, 1, 1}},
                {"E", Vector{0, 1, -1}}};
    raw.contexts = {{"A", "B", "C"}, {"A", "D", "E"}};
    return validate_rayset(raw);
}

std::optional<std::size_t> spin_dirs_count(std::string_view name)
{
    constexpr std::string_view prefix = "spin-dirs(";
    if (!name.starts_with(prefix) || !name.ends_with(")")) {
        return std::nullopt;
    }
    const auto digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    std::size_t n = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || end != digits.data() + digits.size() || n == 0) {
        return std::nullopt;
    }
    return n;
}

} // namespace

RaySet spin_bases(const std::vector<Scalar> &coordinates)
{
    RawRaySet raw;
    raw.dim = 2;
    for (std::size_t k = 0; k < coordinates.size(); ++k) {
        const Scalar &z = coordinates[k];
        const std::string up = "u" + std::to_string(k + 1);
        const std::string down = "d" + std::to_string(k + 1);
        raw.rays.push_back({up, Vector{1, z}});
        raw.rays.push_back({down, Vector{-z.conj(), 1}});
        raw.contexts.push_back({up, down});
    }
    return validate_rayset(raw);
}

std::vector<std::string> builtin_dataset_names()
{
    return {"cabello18", "peres24", "spin-dirs(n)", "s1s2-dim3"};
}

RaySet builtin_dataset(std::string_view name)
{
    if (name == "cabello18") {
        return cabello18();
    }
    if (name == "peres24") {
        return peres24();
    }
    if (name == "s1s2-dim3") {
        return s1s2_dim3();
    }
    if (const auto n = spin_dirs_count(name)) {
        // Directions z_k = k + (k mod 2) i are pairwise distinct and no two
        // are antipodal (that would need z_j conj(z_k) = -1).
        std::vector<Scalar> coordinates;
        for (std::size_t k = 0; k < *n; ++k) {
            const auto kl = static_cast<long>(k);
            coordinates.emplace_back(Rational(kl), Rational(0), Rational(kl % 2), Rational(0));
        }
        return spin_bases(coordinates);
    }
    throw Error(ErrorCode::UnknownDataset, "unknown dataset '" + std::string(name) + "'");
}

} // namespace chkit
