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

#include "chkit/classical.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "algebra_state.hpp"
#include "chkit/error.hpp"

namespace chkit {

namespace detail {

std::size_t partition_size(const Partition &partition) { return partition.cells.size(); }

} // namespace detail

PhaseSpace::PhaseSpace(std::vector<PhasePoint> points) : points_(std::move(points))
{
    if (points_.empty()) {
        throw Error(ErrorCode::InvalidPartition, "phase space has no points");
    }
    index_.reserve(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!index_.emplace(points_[i].id, i).second) {
            throw Error(ErrorCode::InvalidPartition, "repeated point id '" + points_[i].id + "'");
        }
    }
}

PhaseSpace PhaseSpace::from_ids(std::span<const std::string> ids)
{
    std::vector<PhasePoint> points;
    points.reserve(ids.size());
    for (const auto &id : ids) {
        points.push_back({id, std::nullopt, std::nullopt});
    }
    return PhaseSpace(std::move(points));
}

PhaseSpace PhaseSpace::grid(std::size_t steps, const Rational &lo, const Rational &hi)
{
    if (steps == 0 || !(lo < hi)) {
        throw Error(ErrorCode::InvalidPartition, "grid needs steps > 0 and lo < hi");
    }
    const Rational step = (hi - lo) / Rational(static_cast<unsigned long>(steps));
    std::vector<PhasePoint> points;
    points.reserve((steps + 1) * (steps + 1));
    for (std::size_t i = 0; i <= steps; ++i) {
        const Rational x = lo + step * Rational(static_cast<unsigned long>(i));
        for (std::size_t j = 0; j <= steps; ++j) {
            const Rational p = lo + step * Rational(static_cast<unsigned long>(j));
            points.push_back({std::to_string(i) + "," + std::to_string(j), x, p});
        }
    }
    return PhaseSpace(std::move(points));
}

std::size_t PhaseSpace::index_of(std::string_view id) const
{
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) {
        throw Error(ErrorCode::UnknownPoint, "no point '" + std::string(id) + "'");
    }
    return it->second;
}

Indicator Indicator::empty(std::size_t n_points)
{
    return Indicator(boost::dynamic_bitset<>(n_points));
}

Indicator Indicator::full(std::size_t n_points)
{
    boost::dynamic_bitset<> members(n_points);
    members.set();
    return Indicator(std::move(members));
}

Indicator indicator_from_predicate(const PhaseSpace &space,
                                   const std::function<bool(const PhasePoint &)> &pred)
{
    boost::dynamic_bitset<> members(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (pred(space.point(i))) {
            members.set(i);
        }
    }
    return Indicator(std::move(members));
}

Rational oscillator_energy(const PhasePoint &point)
{
    if (!point.x || !point.p) {
        throw Error(ErrorCode::UnknownPoint, "point '" + point.id + "' has no coordinates");
    }
    Rational e = (*point.p * *point.p + *point.x * *point.x) / 2;
    e.canonicalize();
    return e;
}

Indicator energy_below(const PhaseSpace &space, const Rational &e0)
{
    return indicator_from_predicate(space, [&](const PhasePoint &pt) {
        return pt.x && pt.p && oscillator_energy(pt) < e0;
    });
}

namespace {

std::shared_ptr<const Partition> make_partition(std::size_t n_points,
                                               std::vector<std::vector<std::size_t>> cells)
{
    if (n_points == 0 || cells.empty()) {
        throw Error(ErrorCode::InvalidPartition, "empty partition");
    }
    constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> cell_of(n_points, kUnset);
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (cells[k].empty()) {
            throw Error(ErrorCode::InvalidPartition, "cell " + std::to_string(k + 1) + " is empty");
        }
        for (const std::size_t point : cells[k]) {
            if (point >= n_points) {
                throw Error(ErrorCode::UnknownPoint, "point index " + std::to_string(point));
            }
            if (cell_of[point] != kUnset) {
                throw Error(ErrorCode::InvalidPartition,
                            "point " + std::to_string(point) + " lies in two cells");
            }
            cell_of[point] = k;
        }
    }
    if (std::find(cell_of.begin(), cell_of.end(), kUnset) != cell_of.end()) {
        throw Error(ErrorCode::InvalidPartition, "cells do not cover the space");
    }
    for (auto &cell : cells) {
        std::sort(cell.begin(), cell.end());
    }
    return std::make_shared<const Partition>(
        Partition{n_points, std::move(cells), std::move(cell_of)});
}

} // namespace

CoarseGraining::CoarseGraining(std::size_t n_points, std::vector<std::vector<std::size_t>> cells)
    : partition_(make_partition(n_points, std::move(cells))),
      algebra_(EventAlgebra::classical(partition_))
{
}

CoarseGraining CoarseGraining::from_labels(std::span<const std::size_t> labels)
{
    std::map<std::size_t, std::size_t> cell_for_label;
    std::vector<std::vector<std::size_t>> cells;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto [it, inserted] = cell_for_label.emplace(labels[i], cells.size());
        if (inserted) {
            cells.emplace_back();
        }
        cells[it->second].push_back(i);
    }
    return {labels.size(), std::move(cells)};
}

std::size_t CoarseGraining::cell_of(std::size_t point) const
{
    if (point >= partition_->n_points) {
        throw Error(ErrorCode::UnknownPoint, "point index " + std::to_string(point));
    }
    return partition_->cell_of[point];
}

bool CoarseGraining::same_cells(const CoarseGraining &other) const
{
    return partition_->n_points == other.partition_->n_points &&
           partition_->cells == other.partition_->cells;
}

Indicator EventAlgebra::realize_indicator(const Event &event) const
{
    const auto *partition = this->partition();
    if (partition == nullptr || !(event.algebra() == *this)) {
        throw Error(ErrorCode::AlgebraMismatch, "event has no classical realization here");
    }
    boost::dynamic_bitset<> members(partition->n_points);
    for (const auto k : event.cells()) {
        for (const auto point : partition->cells[k]) {
            members.set(point);
        }
    }
    return Indicator(std::move(members));
}

int universal_truth(std::size_t q, const Indicator &p)
{
    if (q >= p.space_size()) {
        throw Error(ErrorCode::UnknownPoint, "point index " + std::to_string(q));
    }
    return p.value(q);
}

TruthFunctional restrict_universal(std::size_t q, const CoarseGraining &g)
{
    return {g.algebra(), g.cell_of(q)};
}

CoarseGraining common_refinement_classical(std::span<const CoarseGraining> gs)
{
    if (gs.empty()) {
        throw Error(ErrorCode::InvalidPartition, "no grainings to refine");
    }
    const std::size_t n = gs.front().n_points();
    for (const auto &g : gs) {
        if (g.n_points() != n) {
            throw Error(ErrorCode::DimMismatch, "grainings over different spaces");
        }
    }
    // Scanning points in index order makes every new tuple open the next cell,
    // so cells come out ordered by their smallest point.
    std::map<std::vector<std::size_t>, std::size_t> cell_for_tuple;
    std::vector<std::vector<std::size_t>> cells;
    std::vector<std::size_t> tuple(gs.size());
    for (std::size_t point = 0; point < n; ++point) {
        for (std::size_t i = 0; i < gs.size(); ++i) {
            tuple[i] = gs[i].cell_of(point);
        }
        const auto [it, inserted] = cell_for_tuple.emplace(tuple, cells.size());
        if (inserted) {
            cells.emplace_back();
        }
        cells[it->second].push_back(point);
    }
    return {n, std::move(cells)};
}

bool is_refinement_classical(const CoarseGraining &fine, const CoarseGraining &coarse)
{
    if (fine.n_points() != coarse.n_points()) {
        throw Error(ErrorCode::DimMismatch, "grainings over different spaces");
    }
    for (std::size_t k = 0; k < fine.size(); ++k) {
        const auto cell = fine.cell(k);
        const std::size_t target = coarse.cell_of(cell.front());
        for (const auto point : cell) {
            if (coarse.cell_of(point) != target) {
                return false;
            }
        }
    }
    return true;
}

namespace {

std::size_t find_root(std::vector<std::size_t> &parent, std::size_t x)
{
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

struct AtomRoots {
    std::vector<std::size_t> of_a;
    std::vector<std::size_t> of_b;
};

// Union-find over the cells of a and b, linking every pair of cells that
// share a point. Roots are comparable between of_a and of_b.
AtomRoots atom_roots(const CoarseGraining &a, const CoarseGraining &b)
{
    if (a.n_points() != b.n_points()) {
        throw Error(ErrorCode::DimMismatch, "grainings over different spaces");
    }
    const std::size_t na = a.size();
    std::vector<std::size_t> parent(na + b.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (std::size_t point = 0; point < a.n_points(); ++point) {
        const std::size_t ra = find_root(parent, a.cell_of(point));
        const std::size_t rb = find_root(parent, na + b.cell_of(point));
        if (ra != rb) {
            parent[std::max(ra, rb)] = std::min(ra, rb);
        }
    }
    AtomRoots roots{std::vector<std::size_t>(na), std::vector<std::size_t>(b.size())};
    for (std::size_t k = 0; k < na; ++k) {
        roots.of_a[k] = find_root(parent, k);
    }
    for (std::size_t k = 0; k < b.size(); ++k) {
        roots.of_b[k] = find_root(parent, na + k);
    }
    return roots;
}

std::optional<ClassicalEfpViolation> check_pair(std::span<const CoarseGraining> grainings,
                                                std::span<const std::size_t> selected,
                                                std::size_t i, std::size_t j)
{
    // Each functional is true on exactly one shared atom, the one holding its
    // selected cell. They agree on every shared element iff those coincide.
    const auto roots = atom_roots(grainings[i], grainings[j]);
    const std::size_t atom_a = roots.of_a[selected[i]];
    if (atom_a == roots.of_b[selected[j]]) {
        return std::nullopt;
    }
    ClassicalEfpViolation violation{i, j, {}};
    for (std::size_t k = 0; k < roots.of_a.size(); ++k) {
        if (roots.of_a[k] == atom_a) {
            violation.atom_cells.push_back(k);
        }
    }
    return violation;
}

void validate_family(std::span<const CoarseGraining> grainings,
                     std::span<const std::size_t> selected)
{
    if (grainings.size() != selected.size()) {
        throw Error(ErrorCode::DimMismatch, "one selected cell per graining is required");
    }
    for (std::size_t i = 0; i < grainings.size(); ++i) {
        if (selected[i] >= grainings[i].size()) {
            throw Error(ErrorCode::NotInFramework, "selected cell out of range");
        }
        if (grainings[i].n_points() != grainings.front().n_points()) {
            throw Error(ErrorCode::DimMismatch, "grainings over different spaces");
        }
    }
}

} // namespace

std::vector<std::vector<std::size_t>> shared_atoms(const CoarseGraining &a,
                                                   const CoarseGraining &b)
{
    const auto roots = atom_roots(a, b);
    std::map<std::size_t, std::vector<std::size_t>> by_root;
    for (std::size_t k = 0; k < roots.of_a.size(); ++k) {
        by_root[roots.of_a[k]].push_back(k);
    }
    std::vector<std::vector<std::size_t>> atoms;
    atoms.reserve(by_root.size());
    for (auto &[root, cells] : by_root) {
        atoms.push_back(std::move(cells));
    }
    return atoms;
}

std::optional<ClassicalEfpViolation>
check_every_framework_classical_serial(std::span<const CoarseGraining> grainings,
                                       std::span<const std::size_t> selected)
{
    validate_family(grainings, selected);
    for (std::size_t i = 0; i < grainings.size(); ++i) {
        for (std::size_t j = i + 1; j < grainings.size(); ++j) {
            if (auto violation = check_pair(grainings, selected, i, j)) {
                return violation;
            }
        }
    }
    return std::nullopt;
}

std::optional<ClassicalEfpViolation>
check_every_framework_classical(std::span<const CoarseGraining> grainings,
                                std::span<const std::size_t> selected)
{
    validate_family(grainings, selected);
    const std::size_t m = grainings.size();
    constexpr auto kNone = std::numeric_limits<std::size_t>::max();
    std::size_t first = kNone;
    const auto pairs = static_cast<std::int64_t>(m * m);
#pragma omp parallel for reduction(min : first) schedule(dynamic)
    for (std::int64_t flat = 0; flat < pairs; ++flat) {
        const auto i = static_cast<std::size_t>(flat) / m;
        const auto j = static_cast<std::size_t>(flat) % m;
        if (j > i && check_pair(grainings, selected, i, j)) {
            first = std::min(first, static_cast<std::size_t>(flat));
        }
    }
    if (first == kNone) {
        return std::nullopt;
    }
    return check_pair(grainings, selected, first / m, first % m);
}

} // namespace chkit
