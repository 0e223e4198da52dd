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
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chkit/events.hpp"
#include "chkit/hilbert.hpp"

namespace chkit {

/// A labelled decomposition of the identity together with its event algebra.
class Framework {
  public:
    Framework(std::string label, DecompositionOfIdentity decomposition);

    [[nodiscard]] const std::string &label() const noexcept { return label_; }
    [[nodiscard]] const DecompositionOfIdentity &decomposition() const noexcept
    {
        return *decomposition_;
    }
    [[nodiscard]] const EventAlgebra &algebra() const noexcept { return algebra_; }
    [[nodiscard]] std::size_t dim() const noexcept { return decomposition_->dim(); }
    [[nodiscard]] std::size_t size() const noexcept { return decomposition_->size(); }
    [[nodiscard]] const Projector &cell(std::size_t k) const { return decomposition_->cell(k); }

    /// The event realizing @p p, if p is a sum of a subset of the cells.
    /// Throws DimMismatch.
    [[nodiscard]] std::optional<Event> membership(const Projector &p) const;
    [[nodiscard]] Projector realize(const Event &event) const
    {
        return algebra_.realize_projector(event);
    }

  private:
    std::string label_;
    std::shared_ptr<const DecompositionOfIdentity> decomposition_;
    EventAlgebra algebra_;
};

/// Frameworks with distinct labels over one Hilbert space. Incompatible
/// members are allowed; only combining them is refused.
class FrameworkSet {
  public:
    /// Throws DimMismatch for mixed dimensions and ParseError for a repeated label.
    explicit FrameworkSet(std::vector<Framework> frameworks);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t size() const noexcept { return frameworks_.size(); }
    [[nodiscard]] std::span<const Framework> frameworks() const noexcept { return frameworks_; }
    [[nodiscard]] const Framework &at(std::size_t i) const { return frameworks_.at(i); }
    /// Throws NotInFramework for an unknown label.
    [[nodiscard]] const Framework &find(std::string_view label) const;
    [[nodiscard]] std::size_t index_of(std::string_view label) const;

  private:
    std::size_t dim_ = 0;
    std::vector<Framework> frameworks_;
};

/// Every cell of one commutes with every cell of the other. Throws DimMismatch.
bool is_compatible(const Framework &f1, const Framework &f2);
/// Pairwise compatibility of the whole list.
bool is_compatible(std::span<const Framework> frameworks);

/// Every cell of @p coarse is exactly a sum of cells of @p fine. Throws DimMismatch.
bool is_refinement(const Framework &fine, const Framework &coarse);
bool is_refinement(const DecompositionOfIdentity &fine, const DecompositionOfIdentity &coarse);

/**
 * @brief Coarsest framework refining every input.
 *
 * Cells are the nonzero products D^(1)_{j1} ... D^(m)_{jm}, in lexicographic
 * order of (j1, ..., jm). Throws Incompatible naming the first incompatible
 * pair: combining incompatible frameworks into one description is refused.
 */
Framework common_refinement(std::span<const Framework> frameworks, std::string label = {});

/// Result of a conjunction of non-commuting properties. This is not the zero
/// projector: a false proposition has a true negation, a meaningless one has none.
struct Meaningless {
    friend bool operator==(const Meaningless &, const Meaningless &) = default;
};

using Conjunction = std::variant<Projector, Meaningless>;

/// P Q when P and Q commute, Meaningless otherwise. Throws DimMismatch.
Conjunction conjunction(const Projector &p, const Projector &q);

struct UniqueTruth {
    TruthFunctional theta;
};

/// Fine cells lying inside the true coarse cell, in increasing order.
struct Candidates {
    std::vector<std::size_t> cells;
};

using RefinedTruth = std::variant<UniqueTruth, Candidates>;

/**
 * @brief Carry a truth functional from a framework to one of its refinements.
 *
 * The admissible fine functionals select a fine cell D_k with D_k T = D_k,
 * where T is the true coarse cell. Throws NotARefinement, and AlgebraMismatch
 * if @p t is not defined on a quantum decomposition.
 */
RefinedTruth refine_truth(const TruthFunctional &t, const Framework &fine);

/// F(P): labels of the frameworks whose algebra contains P, in set order.
std::vector<std::string> frameworks_containing(const Projector &p, const FrameworkSet &set);

/// Selected cell (0-based) per framework label.
struct TruthAssignmentFamily {
    std::map<std::string, std::size_t, std::less<>> selected;

    /// Throws NotInFramework if a label is missing from @p set or a cell is out of range.
    [[nodiscard]] TruthFunctional functional(const FrameworkSet &set,
                                             std::string_view label) const;
};

struct EfpViolation {
    Projector projector;
    std::string first;
    std::string second;
    int first_value = 0;
    int second_value = 0;
};

/**
 * @brief Every-framework check over a finite framework set.
 *
 * For every projector realized in two or more algebras, all assigned values
 * must agree. Pairs are scanned in set order, events of the first framework
 * in increasing mask order; the first disagreement is returned. Throws
 * NotInFramework if the family does not cover the set.
 */
std::optional<EfpViolation> check_every_framework_principle(const TruthAssignmentFamily &family,
                                                            const FrameworkSet &set);

enum class ConflictKind {
    /// theta(I) != 1
    Identity,
    /// theta(I - P) != 1 - theta(P) with both sides defined
    Complement,
    /// theta(PQ) != theta(P) theta(Q) for commuting P, Q with PQ defined
    Product,
    /// P and Q do not commute yet both are assigned 1
    NonCommutingTrue,
};

std::string_view to_string(ConflictKind kind);

struct CandidateEntry {
    Projector projector;
    int value = 0;
    /// Frameworks containing the projector.
    std::vector<std::string> labels;
};

struct CandidateConflict {
    ConflictKind kind;
    /// Entry indices; second is unused for Identity and Complement.
    std::size_t first = 0;
    std::size_t second = 0;
};

/// Values on every realized projector, plus the modified-condition checks.
struct UniversalCandidate {
    std::vector<CandidateEntry> entries;
    std::vector<CandidateConflict> conflicts;

    [[nodiscard]] std::optional<std::size_t> find(const Projector &p) const;
    [[nodiscard]] std::optional<int> value_of(const Projector &p) const;
};

/**
 * @brief theta_u(P) := the common value the family gives P.
 *
 * Entries are listed in order of first appearance (set order, then mask
 * order). Throws InconsistentFamily if the family violates the
 * every-framework check.
 */
UniversalCandidate build_universal_candidate(const TruthAssignmentFamily &family,
                                             const FrameworkSet &set);

enum class QueryAnswer { True, False, MeaninglessInThisFramework };

std::string_view to_string(QueryAnswer answer);

/**
 * @brief Single-framework reasoning state.
 *
 * Exactly one framework is active. Queries about projectors outside its
 * algebra are answered MeaninglessInThisFramework; the session never moves
 * to another framework except through refine(). Not thread-safe.
 */
class ReasoningSession {
  public:
    struct LogEntry {
        std::string action;
        std::string detail;
        bool accepted = true;
    };

    static ReasoningSession open(Framework framework);

    /// Throws NotInFramework.
    void assert_cell(std::size_t cell);
    /// Throws DimMismatch; NoAssertedTruth when P is in the algebra but no cell is asserted.
    QueryAnswer query(const Projector &p);
    /**
     * Switches to @p fine. With an asserted cell the truth is carried over via
     * refine_truth; several candidates need @p chosen_cell (AmbiguousRefinement
     * otherwise), which must be one of them (NotInFramework). Throws
     * NotARefinement if @p fine does not refine the active framework.
     */
    void refine(Framework fine, std::optional<std::size_t> chosen_cell = std::nullopt);

    [[nodiscard]] const Framework &active() const noexcept { return active_; }
    [[nodiscard]] std::optional<std::size_t> asserted_cell() const noexcept { return asserted_; }
    [[nodiscard]] const std::vector<LogEntry> &log() const noexcept { return log_; }

  private:
    explicit ReasoningSession(Framework framework) : active_(std::move(framework)) {}

    Framework active_;
    std::optional<std::size_t> asserted_;
    std::vector<LogEntry> log_;
};

/// Smallest three-dimensional model of two incompatible sample spaces
/// sharing one cell: A = diag(1,0,0), B and C project on e2 and e3, D and E on
/// (e2 + e3)/sqrt2 and (e2 - e3)/sqrt2. S0 = {A, I - A}, S1 = {A, B, C},
/// S2 = {A, D, E}.
FrameworkSet s0s1s2_frameworks();

} // namespace chkit
