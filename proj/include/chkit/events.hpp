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
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "chkit/exactnum.hpp"
#include "chkit/hilbert.hpp"

namespace chkit {

struct Partition;
class Indicator;

using CellMask = boost::dynamic_bitset<>;

namespace detail {
struct AlgebraState;
}

class Event;

/**
 * @brief Boolean algebra of the 2^N subset sums of N base cells.
 *
 * Elements are cell-subset masks. The backing (a quantum decomposition of
 * the identity, a classical coarse graining, or nothing) only matters when
 * an event is realized as a projector or an indicator.
 *
 * Naming note: the classical presentation this library follows calls the
 * product PQ the "join" and P + Q - PQ the "meet", the reverse of the usual
 * lattice convention. The API avoids both words: event_and is the product,
 * event_or is P + Q - PQ.
 */
class EventAlgebra {
  public:
    /// Algebra with no backing; only the combinatorics are available.
    static EventAlgebra abstract(std::size_t n_cells);
    static EventAlgebra quantum(std::shared_ptr<const DecompositionOfIdentity> decomposition);
    static EventAlgebra classical(std::shared_ptr<const Partition> partition);

    [[nodiscard]] std::size_t n_cells() const noexcept;

    [[nodiscard]] Event zero() const;
    [[nodiscard]] Event identity() const;
    /// The base cell D_k (0-based k).
    [[nodiscard]] Event cell(std::size_t k) const;
    [[nodiscard]] Event from_cells(std::span<const std::size_t> cells) const;
    [[nodiscard]] Event from_mask(CellMask mask) const;
    /// Bit j of @p bits selects cell j. Requires n_cells() < 64.
    [[nodiscard]] Event from_bits(std::uint64_t bits) const;

    /// Parses "1,3" (1-based cells), "I", or "0". Throws ParseError.
    [[nodiscard]] Event parse(std::string_view literal) const;

    /// Sum of the selected cells. Throws AlgebraMismatch without a quantum backing.
    [[nodiscard]] Projector realize_projector(const Event &event) const;
    /// Union of the selected cells. Throws AlgebraMismatch without a classical backing.
    [[nodiscard]] Indicator realize_indicator(const Event &event) const;

    [[nodiscard]] const DecompositionOfIdentity *decomposition() const noexcept;
    [[nodiscard]] const Partition *partition() const noexcept;

    friend bool operator==(const EventAlgebra &lhs, const EventAlgebra &rhs)
    {
        return lhs.state_ == rhs.state_;
    }

  private:
    explicit EventAlgebra(std::shared_ptr<const detail::AlgebraState> state)
        : state_(std::move(state))
    {
    }

    std::shared_ptr<const detail::AlgebraState> state_;

    friend class Event;
};

class Event {
  public:
    [[nodiscard]] const CellMask &mask() const noexcept { return mask_; }
    [[nodiscard]] EventAlgebra algebra() const { return EventAlgebra(state_); }
    [[nodiscard]] bool contains(std::size_t cell) const { return mask_.test(cell); }
    [[nodiscard]] bool is_zero() const { return mask_.none(); }
    [[nodiscard]] bool is_identity() const { return mask_.all(); }
    [[nodiscard]] std::vector<std::size_t> cells() const;
    /// Mask as an integer; requires fewer than 64 cells.
    [[nodiscard]] std::uint64_t bits() const;

    /// "0", "I", or 1-based cells such as "1,3".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Event &lhs, const Event &rhs)
    {
        return lhs.state_ == rhs.state_ && lhs.mask_ == rhs.mask_;
    }

  private:
    Event(std::shared_ptr<const detail::AlgebraState> state, CellMask mask)
        : state_(std::move(state)), mask_(std::move(mask))
    {
    }

    std::shared_ptr<const detail::AlgebraState> state_;
    CellMask mask_;

    friend class EventAlgebra;
    friend Event event_complement(const Event &p);
    friend Event event_and(const Event &p, const Event &q);
    friend Event event_or(const Event &p, const Event &q);
};

/// I - P: flips the mask.
Event event_complement(const Event &p);
/// P Q: intersects the masks. Throws AlgebraMismatch.
Event event_and(const Event &p, const Event &q);
/// P + Q - P Q: unions the masks. Throws AlgebraMismatch.
Event event_or(const Event &p, const Event &q);

/// Selects one base cell: theta_k(P) = 1 iff D_k is part of P.
class TruthFunctional {
  public:
    /// Throws NotInFramework when @p selected_cell is out of range.
    TruthFunctional(EventAlgebra algebra, std::size_t selected_cell);

    [[nodiscard]] const EventAlgebra &algebra() const noexcept { return algebra_; }
    [[nodiscard]] std::size_t selected_cell() const noexcept { return selected_cell_; }

    friend bool operator==(const TruthFunctional &, const TruthFunctional &) = default;

  private:
    EventAlgebra algebra_;
    std::size_t selected_cell_;
};

/// 1 iff the selected cell is in mask(P). Throws AlgebraMismatch.
int eval_truth(const TruthFunctional &t, const Event &p);

/// A {0,1}-valued function on an algebra with N < 64 cells, tabulated by
/// integer mask: values[bits] is f of the event with that mask.
struct EventFunction {
    std::size_t n_cells = 0;
    std::vector<std::uint8_t> values;

    static EventFunction tabulate(const TruthFunctional &t);
};

struct HomomorphismViolation {
    /// 1: f(I) = 1 fails; 2: f(I - P) = 1 - f(P) fails; 3: f(PQ) = f(P) f(Q) fails.
    int condition = 0;
    std::uint64_t p = 0;
    std::uint64_t q = 0;
};

/// Empty optional means every condition holds. The reported violation is
/// the first one in (condition, p, q) lexicographic order, except that the
/// zero event is tried last for condition 2.
using HomomorphismCheck = std::optional<HomomorphismViolation>;

/// OpenMP kernel over all event pairs.
HomomorphismCheck verify_homomorphism(const EventFunction &f);
/// Single-threaded reference; same answer as verify_homomorphism.
HomomorphismCheck verify_homomorphism_serial(const EventFunction &f);

/// theta_1 .. theta_N.
std::vector<TruthFunctional> enumerate_truth_functionals(const EventAlgebra &algebra);

inline constexpr std::size_t kOracleMaxCells = 4;

/// Brute force: every one of the 2^(2^N) {0,1}-valued functions, filtered by
/// verify_homomorphism. Throws OracleTooLarge when N > 4. Survivors are
/// returned in increasing order of their value table read as an integer.
std::vector<EventFunction> enumerate_homomorphisms_oracle(std::size_t n_cells);
std::vector<EventFunction> enumerate_homomorphisms_oracle_serial(std::size_t n_cells);

/// Maps each oracle survivor to the truth functional it equals on every event.
/// Throws InconsistentFamily if a survivor matches no theta_k.
std::vector<TruthFunctional> enumerate_truth_functionals_oracle(const EventAlgebra &algebra);

/// Pr(P | D_k) = sum over j in P of probs[j] [j = k] / probs[k].
/// Throws ZeroProbabilityCondition when probs[k] = 0, DimMismatch when the
/// vector length is not N, and InvalidProbability when an entry is negative
/// or the entries do not sum to 1.
Rational conditional_probability(const Event &p, std::size_t k, std::span<const Rational> probs);

} // namespace chkit
