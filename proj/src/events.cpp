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

#include "chkit/events.hpp"

#include <algorithm>
#include <limits>

#include "chkit/error.hpp"
#include "algebra_state.hpp"

namespace chkit {

namespace {

void require_same_algebra(const Event &p, const Event &q)
{
    if (!(p.algebra() == q.algebra())) {
        throw Error(ErrorCode::AlgebraMismatch, "events belong to different algebras");
    }
}

std::uint64_t mask_to_bits(const CellMask &mask)
{
    if (mask.size() >= 64) {
        throw Error(ErrorCode::OracleTooLarge, "integer masks need fewer than 64 cells");
    }
    std::uint64_t bits = 0;
    for (std::size_t j = 0; j < mask.size(); ++j) {
        if (mask.test(j)) {
            bits |= std::uint64_t{1} << j;
        }
    }
    return bits;
}

constexpr std::uint64_t kNoViolation = std::numeric_limits<std::uint64_t>::max();

} // namespace

EventAlgebra EventAlgebra::abstract(std::size_t n_cells)
{
    if (n_cells == 0) {
        throw Error(ErrorCode::ZeroCell, "an event algebra needs at least one cell");
    }
    return EventAlgebra(std::make_shared<const detail::AlgebraState>(
        detail::AlgebraState{n_cells, std::monostate{}}));
}

EventAlgebra EventAlgebra::quantum(std::shared_ptr<const DecompositionOfIdentity> decomposition)
{
    const std::size_t n = decomposition->size();
    return EventAlgebra(std::make_shared<const detail::AlgebraState>(
        detail::AlgebraState{n, std::move(decomposition)}));
}

EventAlgebra EventAlgebra::classical(std::shared_ptr<const Partition> partition)
{
    const std::size_t n = detail::partition_size(*partition);
    return EventAlgebra(std::make_shared<const detail::AlgebraState>(
        detail::AlgebraState{n, std::move(partition)}));
}

std::size_t EventAlgebra::n_cells() const noexcept { return state_->n_cells; }

Event EventAlgebra::zero() const { return {state_, CellMask(state_->n_cells)}; }

Event EventAlgebra::identity() const
{
    CellMask mask(state_->n_cells);
    mask.set();
    return {state_, std::move(mask)};
}

Event EventAlgebra::cell(std::size_t k) const
{
    if (k >= state_->n_cells) {
        throw Error(ErrorCode::NotInFramework, "no cell " + std::to_string(k + 1));
    }
    CellMask mask(state_->n_cells);
    mask.set(k);
    return {state_, std::move(mask)};
}

Event EventAlgebra::from_cells(std::span<const std::size_t> cells) const
{
    CellMask mask(state_->n_cells);
    for (const std::size_t k : cells) {
        if (k >= state_->n_cells) {
            throw Error(ErrorCode::NotInFramework, "no cell " + std::to_string(k + 1));
        }
        mask.set(k);
    }
    return {state_, std::move(mask)};
}

Event EventAlgebra::from_mask(CellMask mask) const
{
    if (mask.size() != state_->n_cells) {
        throw Error(ErrorCode::AlgebraMismatch, "mask length differs from the cell count");
    }
    return {state_, std::move(mask)};
}

Event EventAlgebra::from_bits(std::uint64_t bits) const
{
    const std::size_t n = state_->n_cells;
    if (n >= 64 || (bits >> n) != 0) {
        throw Error(ErrorCode::AlgebraMismatch, "bit mask out of range");
    }
    CellMask mask(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (((bits >> j) & 1U) != 0) {
            mask.set(j);
        }
    }
    return {state_, std::move(mask)};
}

Event EventAlgebra::parse(std::string_view literal) const
{
    if (literal == "I") {
        return identity();
    }
    if (literal == "0") {
        return zero();
    }
    std::vector<std::size_t> cells;
    std::size_t start = 0;
    while (start <= literal.size()) {
        const auto comma = literal.find(',', start);
        std::string_view item = literal.substr(
            start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!item.empty() && item.front() == ' ') {
            item.remove_prefix(1);
        }
        while (!item.empty() && item.back() == ' ') {
            item.remove_suffix(1);
        }
        if (item.empty() ||
            !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw Error(ErrorCode::ParseError, "bad event literal '" + std::string(literal) + "'");
        }
        const std::size_t index = std::stoul(std::string(item));
        if (index == 0 || index > state_->n_cells) {
            throw Error(ErrorCode::ParseError, "cell " + std::string(item) + " out of range 1.." +
                                                   std::to_string(state_->n_cells));
        }
        if (std::find(cells.begin(), cells.end(), index - 1) != cells.end()) {
            throw Error(ErrorCode::ParseError, "cell " + std::string(item) + " repeated in '" +
                                                   std::string(literal) + "'");
        }
        cells.push_back(index - 1);
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return from_cells(cells);
}

Projector EventAlgebra::realize_projector(const Event &event) const
{
    const auto *decomposition = this->decomposition();
    if (decomposition == nullptr || !(event.algebra() == *this)) {
        throw Error(ErrorCode::AlgebraMismatch, "event has no quantum realization here");
    }
    const auto cells = event.cells();
    return decomposition->cell_sum(cells);
}

const DecompositionOfIdentity *EventAlgebra::decomposition() const noexcept
{
    const auto *backing =
        std::get_if<std::shared_ptr<const DecompositionOfIdentity>>(&state_->backing);
    return backing == nullptr ? nullptr : backing->get();
}

const Partition *EventAlgebra::partition() const noexcept
{
    const auto *backing = std::get_if<std::shared_ptr<const Partition>>(&state_->backing);
    return backing == nullptr ? nullptr : backing->get();
}

std::vector<std::size_t> Event::cells() const
{
    std::vector<std::size_t> out;
    for (auto j = mask_.find_first(); j != CellMask::npos; j = mask_.find_next(j)) {
        out.push_back(j);
    }
    return out;
}

std::uint64_t Event::bits() const { return mask_to_bits(mask_); }

std::string Event::to_string() const
{
    if (mask_.all()) {
        return "I";
    }
    if (mask_.none()) {
        return "0";
    }
    std::string out;
    for (const auto j : cells()) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(j + 1);
    }
    return out;
}

Event event_complement(const Event &p) { return {p.state_, ~p.mask_}; }

Event event_and(const Event &p, const Event &q)
{
    require_same_algebra(p, q);
    return {p.state_, p.mask_ & q.mask_};
}

Event event_or(const Event &p, const Event &q)
{
    require_same_algebra(p, q);
    return {p.state_, p.mask_ | q.mask_};
}

TruthFunctional::TruthFunctional(EventAlgebra algebra, std::size_t selected_cell)
    : algebra_(std::move(algebra)), selected_cell_(selected_cell)
{
    if (selected_cell_ >= algebra_.n_cells()) {
        throw Error(ErrorCode::NotInFramework, "no cell " + std::to_string(selected_cell + 1));
    }
}

int eval_truth(const TruthFunctional &t, const Event &p)
{
    if (!(p.algebra() == t.algebra())) {
        throw Error(ErrorCode::AlgebraMismatch, "event is not in the functional's algebra");
    }
    return p.contains(t.selected_cell()) ? 1 : 0;
}

EventFunction EventFunction::tabulate(const TruthFunctional &t)
{
    const std::size_t n = t.algebra().n_cells();
    if (n >= 64) {
        throw Error(ErrorCode::OracleTooLarge, "tabulation needs fewer than 64 cells");
    }
    const std::uint64_t count = std::uint64_t{1} << n;
    EventFunction f{n, std::vector<std::uint8_t>(count)};
    for (std::uint64_t bits = 0; bits < count; ++bits) {
        f.values[bits] = static_cast<std::uint8_t>((bits >> t.selected_cell()) & 1U);
    }
    return f;
}

namespace {

std::uint64_t event_count(const EventFunction &f)
{
    if (f.n_cells >= 32 || f.values.size() != (std::uint64_t{1} << f.n_cells)) {
        throw Error(ErrorCode::DimMismatch, "value table does not cover 2^N events");
    }
    return f.values.size();
}

// Conditions 1 and 2 are linear in the event count; only the pair condition
// is worth a parallel kernel.
HomomorphismCheck check_unary_conditions(const EventFunction &f, std::uint64_t count)
{
    const std::uint64_t full = count - 1;
    if (f.values[full] != 1) {
        return HomomorphismViolation{1, full, 0};
    }
    // The zero event goes last: any failure there is mirrored at I, and a
    // nonzero witness says more.
    for (std::uint64_t step = 1; step <= count; ++step) {
        const std::uint64_t p = step % count;
        if (f.values[full ^ p] != 1 - f.values[p]) {
            return HomomorphismViolation{2, p, 0};
        }
    }
    return std::nullopt;
}

} // namespace

HomomorphismCheck verify_homomorphism_serial(const EventFunction &f)
{
    const std::uint64_t count = event_count(f);
    if (auto unary = check_unary_conditions(f, count)) {
        return unary;
    }
    for (std::uint64_t p = 0; p < count; ++p) {
        for (std::uint64_t q = 0; q < count; ++q) {
            if (f.values[p & q] != f.values[p] * f.values[q]) {
                return HomomorphismViolation{3, p, q};
            }
        }
    }
    return std::nullopt;
}

HomomorphismCheck verify_homomorphism(const EventFunction &f)
{
    const std::uint64_t count = event_count(f);
    if (auto unary = check_unary_conditions(f, count)) {
        return unary;
    }
    std::uint64_t first = kNoViolation;
    const auto n = static_cast<std::int64_t>(count);
    const std::uint8_t *values = f.values.data();
#pragma omp parallel for reduction(min : first) schedule(static)
    for (std::int64_t p = 0; p < n; ++p) {
        const auto up = static_cast<std::uint64_t>(p);
        for (std::uint64_t q = 0; q < count; ++q) {
            if (values[up & q] != values[up] * values[q]) {
                first = std::min(first, up * count + q);
                break;
            }
        }
    }
    if (first == kNoViolation) {
        return std::nullopt;
    }
    return HomomorphismViolation{3, first / count, first % count};
}

std::vector<TruthFunctional> enumerate_truth_functionals(const EventAlgebra &algebra)
{
    std::vector<TruthFunctional> out;
    out.reserve(algebra.n_cells());
    for (std::size_t k = 0; k < algebra.n_cells(); ++k) {
        out.emplace_back(algebra, k);
    }
    return out;
}

namespace {

std::uint64_t oracle_candidate_count(std::size_t n_cells)
{
    if (n_cells == 0 || n_cells > kOracleMaxCells) {
        throw Error(ErrorCode::OracleTooLarge,
                    "oracle enumeration supports 1.." + std::to_string(kOracleMaxCells) +
                        " cells, got " + std::to_string(n_cells));
    }
    return std::uint64_t{1} << (std::uint64_t{1} << n_cells);
}

EventFunction candidate_function(std::size_t n_cells, std::uint64_t candidate)
{
    const std::uint64_t events = std::uint64_t{1} << n_cells;
    EventFunction f{n_cells, std::vector<std::uint8_t>(events)};
    for (std::uint64_t e = 0; e < events; ++e) {
        f.values[e] = static_cast<std::uint8_t>((candidate >> e) & 1U);
    }
    return f;
}

} // namespace

std::vector<EventFunction> enumerate_homomorphisms_oracle_serial(std::size_t n_cells)
{
    const std::uint64_t candidates = oracle_candidate_count(n_cells);
    std::vector<EventFunction> survivors;
    for (std::uint64_t c = 0; c < candidates; ++c) {
        auto f = candidate_function(n_cells, c);
        if (!verify_homomorphism_serial(f)) {
            survivors.push_back(std::move(f));
        }
    }
    return survivors;
}

std::vector<EventFunction> enumerate_homomorphisms_oracle(std::size_t n_cells)
{
    const std::uint64_t candidates = oracle_candidate_count(n_cells);
    std::vector<std::uint8_t> passed(candidates, 0);
    const auto n = static_cast<std::int64_t>(candidates);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < n; ++c) {
        const auto f = candidate_function(n_cells, static_cast<std::uint64_t>(c));
        passed[static_cast<std::size_t>(c)] = verify_homomorphism_serial(f) ? 0 : 1;
    }
    std::vector<EventFunction> survivors;
    for (std::uint64_t c = 0; c < candidates; ++c) {
        if (passed[c] != 0) {
            survivors.push_back(candidate_function(n_cells, c));
        }
    }
    return survivors;
}

std::vector<TruthFunctional> enumerate_truth_functionals_oracle(const EventAlgebra &algebra)
{
    const auto survivors = enumerate_homomorphisms_oracle(algebra.n_cells());
    const auto direct = enumerate_truth_functionals(algebra);
    std::vector<TruthFunctional> out;
    for (const auto &f : survivors) {
        const auto match = std::find_if(direct.begin(), direct.end(), [&](const auto &t) {
            return EventFunction::tabulate(t).values == f.values;
        });
        if (match == direct.end()) {
            throw Error(ErrorCode::InconsistentFamily,
                        "a homomorphism matches no single-cell truth functional");
        }
        out.push_back(*match);
    }
    return out;
}

Rational conditional_probability(const Event &p, std::size_t k, std::span<const Rational> probs)
{
    const std::size_t n = p.mask().size();
    if (probs.size() != n) {
        throw Error(ErrorCode::DimMismatch, "probability vector length " +
                                                std::to_string(probs.size()) + " for " +
                                                std::to_string(n) + " cells");
    }
    if (k >= n) {
        throw Error(ErrorCode::NotInFramework, "no cell " + std::to_string(k + 1));
    }
    Rational total = 0;
    for (const auto &value : probs) {
        if (value < 0) {
            throw Error(ErrorCode::InvalidProbability, "negative probability");
        }
        total += value;
    }
    if (total != 1) {
        throw Error(ErrorCode::InvalidProbability, "probabilities sum to " + format_rational(total));
    }
    if (probs[k] == 0) {
        throw Error(ErrorCode::ZeroProbabilityCondition,
                    "conditioning cell " + std::to_string(k + 1) + " has probability 0");
    }
    // Pr(P and D_k) only picks up cell k itself, since distinct cells are disjoint.
    Rational joint = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (p.contains(j) && j == k) {
            joint += probs[j];
        }
    }
    Rational result = joint / probs[k];
    result.canonicalize();
    return result;
}

} // namespace chkit
