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

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "chkit/events.hpp"
#include "chkit/exactnum.hpp"

namespace chkit {

struct PhasePoint {
    std::string id;
    /// Position and momentum, when the point comes from a grid.
    std::optional<Rational> x;
    std::optional<Rational> p;
};

/// Finite set of distinct phase points, addressed by index or id.
class PhaseSpace {
  public:
    /// Throws InvalidPartition on an empty list or a repeated id.
    explicit PhaseSpace(std::vector<PhasePoint> points);

    static PhaseSpace from_ids(std::span<const std::string> ids);
    /// (steps + 1)^2 points covering [lo, hi]^2; ids are "i,j" grid indices.
    static PhaseSpace grid(std::size_t steps, const Rational &lo, const Rational &hi);

    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] const PhasePoint &point(std::size_t index) const { return points_.at(index); }
    [[nodiscard]] std::span<const PhasePoint> points() const noexcept { return points_; }
    /// Throws UnknownPoint.
    [[nodiscard]] std::size_t index_of(std::string_view id) const;

  private:
    std::vector<PhasePoint> points_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Characteristic function of a subset of a phase space.
class Indicator {
  public:
    explicit Indicator(boost::dynamic_bitset<> members) : members_(std::move(members)) {}

    static Indicator empty(std::size_t n_points);
    static Indicator full(std::size_t n_points);

    [[nodiscard]] std::size_t space_size() const noexcept { return members_.size(); }
    [[nodiscard]] const boost::dynamic_bitset<> &members() const noexcept { return members_; }
    /// P(gamma): 1 on members, 0 elsewhere.
    [[nodiscard]] int value(std::size_t point) const { return members_.test(point) ? 1 : 0; }
    [[nodiscard]] std::size_t count() const { return members_.count(); }

    friend bool operator==(const Indicator &, const Indicator &) = default;

  private:
    boost::dynamic_bitset<> members_;
};

Indicator indicator_from_predicate(const PhaseSpace &space,
                                   const std::function<bool(const PhasePoint &)> &pred);

/// Energy of the unit-mass, unit-frequency oscillator: (p^2 + x^2) / 2.
Rational oscillator_energy(const PhasePoint &point);

/// Points with energy strictly below @p e0. Points without coordinates are outside.
Indicator energy_below(const PhaseSpace &space, const Rational &e0);

/// Raw partition data: cells of point indices plus the inverse map.
struct Partition {
    std::size_t n_points = 0;
    std::vector<std::vector<std::size_t>> cells;
    std::vector<std::size_t> cell_of;
};

/**
 * @brief Partition of a phase space into non-empty disjoint cells.
 *
 * Owns the event algebra generated by its cells, so every truth functional
 * built from the same graining shares one algebra.
 */
class CoarseGraining {
  public:
    /// Throws InvalidPartition unless the cells are non-empty, disjoint, and
    /// cover 0 .. n_points - 1.
    CoarseGraining(std::size_t n_points, std::vector<std::vector<std::size_t>> cells);

    /// Groups points by label; cells appear in order of first occurrence.
    static CoarseGraining from_labels(std::span<const std::size_t> labels);

    [[nodiscard]] std::size_t n_points() const noexcept { return partition_->n_points; }
    [[nodiscard]] std::size_t size() const noexcept { return partition_->cells.size(); }
    [[nodiscard]] std::span<const std::size_t> cell(std::size_t k) const
    {
        return partition_->cells.at(k);
    }
    /// Index of the cell holding @p point. Throws UnknownPoint.
    [[nodiscard]] std::size_t cell_of(std::size_t point) const;
    [[nodiscard]] const EventAlgebra &algebra() const noexcept { return algebra_; }
    [[nodiscard]] const Partition &partition() const noexcept { return *partition_; }

    /// Same cells in the same order.
    [[nodiscard]] bool same_cells(const CoarseGraining &other) const;

  private:
    std::shared_ptr<const Partition> partition_;
    EventAlgebra algebra_;
};

/// theta_q(P) = P(gamma_q). Throws UnknownPoint.
int universal_truth(std::size_t q, const Indicator &p);

/// The truth functional selecting the cell that contains q. Throws UnknownPoint.
TruthFunctional restrict_universal(std::size_t q, const CoarseGraining &g);

/// All non-empty intersections of one cell from each input. Cells are ordered
/// by their smallest point. Throws DimMismatch if the spaces differ.
CoarseGraining common_refinement_classical(std::span<const CoarseGraining> gs);

/// Each cell of @p coarse is a union of cells of @p fine.
bool is_refinement_classical(const CoarseGraining &fine, const CoarseGraining &coarse);

/// Atoms of the Boolean algebra shared by two grainings: connected groups of
/// overlapping cells. Each atom lists its cells in @p a (sorted).
std::vector<std::vector<std::size_t>> shared_atoms(const CoarseGraining &a,
                                                   const CoarseGraining &b);

struct ClassicalEfpViolation {
    std::size_t first = 0;
    std::size_t second = 0;
    /// Shared element (as cells of the first graining) valued differently.
    std::vector<std::size_t> atom_cells;
};

/**
 * @brief Every-framework check for a family of classical truth functionals.
 *
 * @p selected[i] is the cell chosen in grainings[i]. Two functionals agree on
 * every shared element iff they agree on every shared atom, which is what
 * this checks for each pair. The reported violation is the first pair in
 * (first, second) order.
 */
std::optional<ClassicalEfpViolation>
check_every_framework_classical(std::span<const CoarseGraining> grainings,
                                std::span<const std::size_t> selected);
std::optional<ClassicalEfpViolation>
check_every_framework_classical_serial(std::span<const CoarseGraining> grainings,
                                       std::span<const std::size_t> selected);

} // namespace chkit
