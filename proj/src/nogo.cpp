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

#include "chkit/nogo.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <unordered_map>

#include "chkit/error.hpp"

namespace chkit {

namespace {

/// Scaled so the first nonzero component is 1; projectively equal rays share a key.
std::string direction_key(const Vector &v)
{
    std::size_t lead = 0;
    while (v[lead].is_zero()) {
        ++lead;
    }
    const Scalar scale = v[lead].inverse();
    std::string key = std::to_string(lead) + ':';
    for (std::size_t j = lead; j < v.dim(); ++j) {
        for (const auto &part : (v[j] * scale).encode()) {
            key += part;
            key += ' ';
        }
    }
    return key;
}

// Images in Z/p for p = 998244353. Since p = 1 mod 8, both 2 and -1 have
// square roots there, so Q(sqrt2, i) maps into Z/p whenever no denominator is
// divisible by p. A nonzero image of <u, v> proves u and v are not
// orthogonal; a zero image is only a hint and is confirmed exactly.
constexpr std::uint64_t kModulus = 998244353;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp)
{
    std::uint64_t result = 1;
    for (base %= kModulus; exp != 0; exp >>= 1) {
        if ((exp & 1U) != 0) {
            result = result * base % kModulus;
        }
        base = base * base % kModulus;
    }
    return result;
}

struct ModularUnits {
    std::uint64_t sqrt2;
    std::uint64_t i;
};

const ModularUnits &modular_units()
{
    // 3 generates the multiplicative group; zeta is a primitive 8th root,
    // zeta + zeta^-1 squares to 2 and zeta^2 squares to -1.
    static const ModularUnits units = [] {
        const std::uint64_t zeta = pow_mod(3, (kModulus - 1) / 8);
        return ModularUnits{(zeta + pow_mod(zeta, 7)) % kModulus, zeta * zeta % kModulus};
    }();
    return units;
}

std::optional<std::uint64_t> rational_mod(const Rational &q)
{
    const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kModulus);
    if (den == 0) {
        return std::nullopt;
    }
    return mpz_fdiv_ui(q.get_num_mpz_t(), kModulus) * pow_mod(den, kModulus - 2) % kModulus;
}

struct ModularImage {
    bool usable = true;
    std::vector<std::uint64_t> conj;
    std::vector<std::uint64_t> plain;
};

ModularImage modular_image(const Vector &v)
{
    const auto &units = modular_units();
    ModularImage image;
    for (const auto &x : v.entries()) {
        const auto a = rational_mod(x.a());
        const auto b = rational_mod(x.b());
        const auto c = rational_mod(x.c());
        const auto d = rational_mod(x.d());
        if (!a || !b || !c || !d) {
            image.usable = false;
            return image;
        }
        const std::uint64_t re = (*a + *b * units.sqrt2) % kModulus;
        const std::uint64_t im = (*c + *d * units.sqrt2) % kModulus * units.i % kModulus;
        image.plain.push_back((re + im) % kModulus);
        image.conj.push_back((re + kModulus - im) % kModulus);
    }
    return image;
}

std::uint64_t modular_inner_product(const ModularImage &u, const ModularImage &v)
{
    std::uint64_t sum = 0;
    for (std::size_t j = 0; j < u.conj.size(); ++j) {
        sum = (sum + u.conj[j] * v.plain[j]) % kModulus;
    }
    return sum;
}

} // namespace

std::size_t RaySet::multiplicity(std::size_t i) const
{
    std::size_t count = 0;
    for (const auto &context : contexts_) {
        count += static_cast<std::size_t>(std::count(context.begin(), context.end(), i));
    }
    return count;
}

RaySet validate_rayset(const RawRaySet &raw)
{
    if (raw.dim == 0) {
        throw Error(ErrorCode::DimMismatch, "ray set dimension must be positive");
    }
    RaySet out;
    out.dim_ = raw.dim;
    std::unordered_map<std::string, std::size_t> index_of_id;
    std::unordered_map<std::string, std::size_t> index_of_direction;
    for (const auto &ray : raw.rays) {
        if (ray.vector.dim() != raw.dim) {
            throw Error(ErrorCode::DimMismatch, "ray '" + ray.id + "' has dimension " +
                                                    std::to_string(ray.vector.dim()));
        }
        if (ray.vector.is_zero()) {
            throw Error(ErrorCode::ZeroRay, "ray '" + ray.id + "' is the zero vector");
        }
        const std::string key = direction_key(ray.vector);
        const auto known = index_of_direction.find(key);
        const std::size_t target = known == index_of_direction.end() ? out.rays_.size() : known->second;
        if (const auto seen = index_of_id.find(ray.id); seen != index_of_id.end()) {
            if (seen->second != target) {
                throw Error(ErrorCode::DuplicateRayConflict,
                            "id '" + ray.id + "' names two different directions");
            }
            continue;
        }
        if (target == out.rays_.size()) {
            index_of_direction.emplace(key, target);
            out.rays_.push_back(ray.vector);
            out.ids_.push_back(ray.id);
        }
        index_of_id.emplace(ray.id, target);
    }

    for (std::size_t c = 0; c < raw.contexts.size(); ++c) {
        const auto &names = raw.contexts[c];
        const std::string where = "context " + std::to_string(c + 1);
        std::vector<std::size_t> context;
        context.reserve(names.size());
        for (const auto &name : names) {
            const auto it = index_of_id.find(name);
            if (it == index_of_id.end()) {
                throw Error(ErrorCode::ParseError, where + " names unknown ray '" + name + "'");
            }
            if (std::find(context.begin(), context.end(), it->second) != context.end()) {
                throw Error(ErrorCode::DuplicateRayConflict,
                            where + " uses ray '" + out.ids_[it->second] + "' twice");
            }
            context.push_back(it->second);
        }
        if (context.size() != raw.dim) {
            throw Error(ErrorCode::ContextNotABasis, where + " has " +
                                                         std::to_string(context.size()) +
                                                         " rays in dimension " +
                                                         std::to_string(raw.dim));
        }
        for (std::size_t a = 0; a < context.size(); ++a) {
            for (std::size_t b = a + 1; b < context.size(); ++b) {
                if (!inner_product(out.rays_[context[a]], out.rays_[context[b]]).is_zero()) {
                    throw Error(ErrorCode::ContextNotABasis,
                                where + ": rays '" + out.ids_[context[a]] + "' and '" +
                                    out.ids_[context[b]] + "' are not orthogonal");
                }
            }
        }
        out.contexts_.push_back(std::move(context));
    }
    return out;
}

RawRaySet to_raw(const RaySet &rays)
{
    RawRaySet raw;
    raw.dim = rays.dim();
    for (std::size_t i = 0; i < rays.size(); ++i) {
        raw.rays.push_back({rays.id(i), rays.ray(i)});
    }
    for (const auto &context : rays.contexts()) {
        std::vector<std::string> names;
        for (const auto i : context) {
            names.push_back(rays.id(i));
        }
        raw.contexts.push_back(std::move(names));
    }
    return raw;
}

std::size_t OrthogonalityGraph::edge_count() const
{
    std::size_t twice = 0;
    for (const auto &neighbours : adjacency) {
        twice += neighbours.size();
    }
    return twice / 2;
}

OrthogonalityGraph orthogonality_graph(const RaySet &rays)
{
    const std::size_t n = rays.size();
    OrthogonalityGraph graph{std::vector<std::vector<std::size_t>>(n)};
    std::vector<ModularImage> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        images.push_back(modular_image(rays.ray(i)));
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (images[a].usable && images[b].usable &&
                modular_inner_product(images[a], images[b]) != 0) {
                continue;
            }
            if (inner_product(rays.ray(a), rays.ray(b)).is_zero()) {
                graph.adjacency[a].push_back(b);
                graph.adjacency[b].push_back(a);
            }
        }
    }
    for (auto &neighbours : graph.adjacency) {
        std::sort(neighbours.begin(), neighbours.end());
    }
    return graph;
}

std::optional<std::string> verify_assignment(const RaySet &rays,
                                             const NoncontextualAssignment &assignment)
{
    if (assignment.values.size() != rays.size()) {
        return "assignment covers " + std::to_string(assignment.values.size()) + " of " +
               std::to_string(rays.size()) + " rays";
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (assignment.values[i] > 1) {
            return "ray '" + rays.id(i) + "' has a value other than 0 or 1";
        }
    }
    for (std::size_t c = 0; c < rays.contexts().size(); ++c) {
        std::size_t ones = 0;
        for (const auto i : rays.contexts()[c]) {
            ones += assignment.values[i];
        }
        if (ones != 1) {
            return "context " + std::to_string(c + 1) + " has " + std::to_string(ones) +
                   " rays valued 1";
        }
    }
    const auto graph = orthogonality_graph(rays);
    for (std::size_t a = 0; a < rays.size(); ++a) {
        if (assignment.values[a] != 1) {
            continue;
        }
        for (const auto b : graph.adjacency[a]) {
            if (assignment.values[b] == 1) {
                return "orthogonal rays '" + rays.id(a) + "' and '" + rays.id(b) +
                       "' are both valued 1";
            }
        }
    }
    return std::nullopt;
}

std::optional<ParityCertificate> parity_certificate(const RaySet &rays)
{
    ParityCertificate certificate{std::vector<std::size_t>(rays.size()), rays.contexts().size()};
    for (const auto &context : rays.contexts()) {
        for (const auto i : context) {
            ++certificate.multiplicity[i];
        }
    }
    if (certificate.context_count % 2 == 0) {
        return std::nullopt;
    }
    for (const auto m : certificate.multiplicity) {
        if (m % 2 != 0) {
            return std::nullopt;
        }
    }
    return certificate;
}

namespace {

constexpr std::int8_t kOpen = -1;

/// Immutable search tables shared by all workers.
struct SearchProblem {
    std::vector<std::vector<std::size_t>> contexts;
    std::vector<std::vector<std::size_t>> orthogonal;
    std::vector<std::vector<std::size_t>> contexts_of_ray;

    explicit SearchProblem(const RaySet &rays)
        : contexts(rays.contexts()), orthogonal(orthogonality_graph(rays).adjacency),
          contexts_of_ray(rays.size())
    {
        for (std::size_t c = 0; c < contexts.size(); ++c) {
            for (const auto i : contexts[c]) {
                contexts_of_ray[i].push_back(c);
            }
        }
    }

    [[nodiscard]] std::size_t ray_count() const noexcept { return orthogonal.size(); }
};

using Values = std::vector<std::int8_t>;

/// Sets @p ray to @p value and propagates to fixpoint. False on contradiction.
bool assign(const SearchProblem &problem, Values &values, std::size_t ray, std::int8_t value)
{
    std::vector<std::pair<std::size_t, std::int8_t>> pending{{ray, value}};
    while (!pending.empty()) {
        const auto [r, v] = pending.back();
        pending.pop_back();
        if (values[r] == v) {
            continue;
        }
        if (values[r] != kOpen) {
            return false;
        }
        values[r] = v;
        if (v == 1) {
            for (const auto s : problem.orthogonal[r]) {
                pending.emplace_back(s, 0);
            }
            continue;
        }
        for (const auto c : problem.contexts_of_ray[r]) {
            std::size_t open = 0;
            std::size_t last_open = 0;
            bool has_one = false;
            for (const auto s : problem.contexts[c]) {
                if (values[s] == 1) {
                    has_one = true;
                    break;
                }
                if (values[s] == kOpen) {
                    ++open;
                    last_open = s;
                }
            }
            if (has_one) {
                continue;
            }
            if (open == 0) {
                return false;
            }
            if (open == 1) {
                pending.emplace_back(last_open, 1);
            }
        }
    }
    return true;
}

/// Open rays of the first context without a 1, or nullopt when every
/// context already has its 1.
std::optional<std::vector<std::size_t>> branch_candidates(const SearchProblem &problem,
                                                          const Values &values)
{
    for (const auto &context : problem.contexts) {
        if (std::any_of(context.begin(), context.end(),
                        [&](std::size_t r) { return values[r] == 1; })) {
            continue;
        }
        std::vector<std::size_t> open;
        for (const auto r : context) {
            if (values[r] == kOpen) {
                open.push_back(r);
            }
        }
        std::sort(open.begin(), open.end());
        return open;
    }
    return std::nullopt;
}

NoncontextualAssignment to_assignment(const Values &values)
{
    NoncontextualAssignment out;
    out.values.reserve(values.size());
    for (const auto v : values) {
        // Every ray sits in some context and is orthogonal to that context's
        // 1, so no ray stays open; rays outside all contexts default to 0.
        out.values.push_back(v == 1 ? 1 : 0);
    }
    return out;
}

struct Tally {
    std::uint64_t nodes = 0;
    std::uint64_t witnesses = 0;
    std::optional<NoncontextualAssignment> first;
};

/// Depth-first search below @p values. Returns true to stop (a witness was
/// found and enumeration is off).
bool explore(const SearchProblem &problem, const Values &values, bool enumerate_all, Tally &tally)
{
    const auto candidates = branch_candidates(problem, values);
    if (!candidates) {
        ++tally.witnesses;
        if (!tally.first) {
            tally.first = to_assignment(values);
        }
        return !enumerate_all;
    }
    for (const auto r : *candidates) {
        ++tally.nodes;
        Values next = values;
        if (assign(problem, next, r, 1) && explore(problem, next, enumerate_all, tally)) {
            return true;
        }
    }
    return false;
}

/// Initial fixpoint: contexts of size one are forced before any branching.
std::optional<Values> root_values(const SearchProblem &problem)
{
    Values values(problem.ray_count(), kOpen);
    for (const auto &context : problem.contexts) {
        if (context.size() == 1 && !assign(problem, values, context.front(), 1)) {
            return std::nullopt;
        }
    }
    return values;
}

SearchResult to_result(Tally tally)
{
    SearchResult result;
    result.exists = tally.witnesses > 0;
    result.witness = std::move(tally.first);
    result.nodes_explored = tally.nodes;
    result.witness_count = tally.witnesses;
    return result;
}

} // namespace

SearchResult search_assignment_serial(const RaySet &rays, bool enumerate_all)
{
    const SearchProblem problem(rays);
    const auto root = root_values(problem);
    Tally tally;
    if (root) {
        explore(problem, *root, enumerate_all, tally);
    }
    return to_result(std::move(tally));
}

SearchResult search_assignment(const RaySet &rays, const SearchOptions &options)
{
    const SearchProblem problem(rays);
    const auto root = root_values(problem);
    if (!root) {
        return {};
    }
    const auto candidates = branch_candidates(problem, *root);
    if (!candidates) {
        Tally tally;
        explore(problem, *root, options.enumerate_all, tally);
        return to_result(std::move(tally));
    }

    // Each root branch is searched independently; merging in branch order
    // reproduces the serial traversal exactly.
    const auto branches = static_cast<std::int64_t>(candidates->size());
    std::vector<Tally> tallies(candidates->size());
    std::atomic<std::int64_t> first_success{std::numeric_limits<std::int64_t>::max()};
    const int threads = options.threads > 0 ? options.threads : 0;

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads != 1)
    for (std::int64_t b = 0; b < branches; ++b) {
        // A branch after a known success can never contribute.
        if (!options.enumerate_all && b > first_success.load(std::memory_order_relaxed)) {
            continue;
        }
        auto &tally = tallies[static_cast<std::size_t>(b)];
        tally.nodes = 1;
        Values next = *root;
        if (assign(problem, next, (*candidates)[static_cast<std::size_t>(b)], 1)) {
            explore(problem, next, options.enumerate_all, tally);
        }
        if (!options.enumerate_all && tally.witnesses > 0) {
            std::int64_t seen = first_success.load(std::memory_order_relaxed);
            while (b < seen && !first_success.compare_exchange_weak(seen, b)) {
            }
        }
    }

    Tally merged;
    for (auto &tally : tallies) {
        merged.nodes += tally.nodes;
        merged.witnesses += tally.witnesses;
        if (!merged.first && tally.first) {
            merged.first = std::move(tally.first);
        }
        if (!options.enumerate_all && merged.witnesses > 0) {
            break;
        }
    }
    return to_result(std::move(merged));
}

FrameworkSet frameworks_from_rayset(const RaySet &rays)
{
    std::vector<Framework> frameworks;
    for (std::size_t c = 0; c < rays.contexts().size(); ++c) {
        std::vector<Vector> basis;
        for (const auto i : rays.contexts()[c]) {
            basis.push_back(rays.ray(i));
        }
        frameworks.emplace_back("C" + std::to_string(c + 1), decomposition_from_basis(basis));
    }
    return FrameworkSet(std::move(frameworks));
}

} // namespace chkit
