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

#include "chkit/frameworks.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "chkit/error.hpp"

namespace chkit {

namespace {

void require_same_dim(std::size_t lhs, std::size_t rhs)
{
    if (lhs != rhs) {
        throw Error(ErrorCode::DimMismatch,
                    "dimensions " + std::to_string(lhs) + " and " + std::to_string(rhs));
    }
}

// Largest framework whose events are enumerated exhaustively.
constexpr std::size_t kMaxEnumeratedCells = 20;

std::uint64_t event_count(const Framework &f)
{
    if (f.size() > kMaxEnumeratedCells) {
        throw Error(ErrorCode::OracleTooLarge,
                    "framework '" + f.label() + "' has too many cells to enumerate");
    }
    return std::uint64_t{1} << f.size();
}

// P belongs to the algebra iff P D_k is D_k or 0 for every cell; then
// P = P * sum_k D_k is the sum of the cells with P D_k = D_k.
std::optional<CellMask> membership_mask(const DecompositionOfIdentity &d, const Projector &p)
{
    require_same_dim(d.dim(), p.dim());
    // For projectors, tr(P D) = 0 iff PD = 0 and tr(P D) = rank D iff PD = D.
    CellMask mask(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) {
        const Matrix &cell = d.cell(k).matrix();
        Scalar trace;
        for (std::size_t i = 0; i < d.dim(); ++i) {
            for (std::size_t j = 0; j < d.dim(); ++j) {
                trace.add_product(p.matrix()(i, j), cell(j, i));
            }
        }
        if (trace == Scalar(static_cast<long>(d.cell(k).rank()))) {
            mask.set(k);
        } else if (!trace.is_zero()) {
            return std::nullopt;
        }
    }
    return mask;
}

} // namespace

Framework::Framework(std::string label, DecompositionOfIdentity decomposition)
    : label_(std::move(label)),
      decomposition_(std::make_shared<const DecompositionOfIdentity>(std::move(decomposition))),
      algebra_(EventAlgebra::quantum(decomposition_))
{
}

std::optional<Event> Framework::membership(const Projector &p) const
{
    auto mask = membership_mask(*decomposition_, p);
    if (!mask) {
        return std::nullopt;
    }
    return algebra_.from_mask(std::move(*mask));
}

FrameworkSet::FrameworkSet(std::vector<Framework> frameworks) : frameworks_(std::move(frameworks))
{
    if (frameworks_.empty()) {
        throw Error(ErrorCode::ParseError, "framework set is empty");
    }
    dim_ = frameworks_.front().dim();
    std::unordered_set<std::string> labels;
    for (const auto &f : frameworks_) {
        require_same_dim(dim_, f.dim());
        if (!labels.insert(f.label()).second) {
            throw Error(ErrorCode::ParseError, "repeated framework label '" + f.label() + "'");
        }
    }
}

std::size_t FrameworkSet::index_of(std::string_view label) const
{
    for (std::size_t i = 0; i < frameworks_.size(); ++i) {
        if (frameworks_[i].label() == label) {
            return i;
        }
    }
    throw Error(ErrorCode::NotInFramework, "no framework labelled '" + std::string(label) + "'");
}

const Framework &FrameworkSet::find(std::string_view label) const
{
    return frameworks_[index_of(label)];
}

bool is_compatible(const Framework &f1, const Framework &f2)
{
    require_same_dim(f1.dim(), f2.dim());
    for (const auto &p : f1.decomposition().cells()) {
        for (const auto &q : f2.decomposition().cells()) {
            if (!commutes(p, q)) {
                return false;
            }
        }
    }
    return true;
}

bool is_compatible(std::span<const Framework> frameworks)
{
    for (std::size_t i = 0; i < frameworks.size(); ++i) {
        for (std::size_t j = i + 1; j < frameworks.size(); ++j) {
            if (!is_compatible(frameworks[i], frameworks[j])) {
                return false;
            }
        }
    }
    return true;
}

bool is_refinement(const DecompositionOfIdentity &fine, const DecompositionOfIdentity &coarse)
{
    require_same_dim(fine.dim(), coarse.dim());
    return std::all_of(coarse.cells().begin(), coarse.cells().end(),
                       [&](const Projector &cell) { return membership_mask(fine, cell).has_value(); });
}

bool is_refinement(const Framework &fine, const Framework &coarse)
{
    return is_refinement(fine.decomposition(), coarse.decomposition());
}

Framework common_refinement(std::span<const Framework> frameworks, std::string label)
{
    if (frameworks.empty()) {
        throw Error(ErrorCode::ParseError, "no frameworks to combine");
    }
    const auto incompatible = [&] {
        for (std::size_t i = 0; i < frameworks.size(); ++i) {
            for (std::size_t j = i + 1; j < frameworks.size(); ++j) {
                if (!is_compatible(frameworks[i], frameworks[j])) {
                    return Error(ErrorCode::Incompatible, "'" + frameworks[i].label() + "' and '" +
                                                              frameworks[j].label() +
                                                              "' cannot be combined into one framework");
                }
            }
        }
        return Error(ErrorCode::Incompatible, "frameworks cannot be combined");
    };
    for (std::size_t i = 1; i < frameworks.size(); ++i) {
        require_same_dim(frameworks.front().dim(), frameworks[i].dim());
    }
    // Folding left to right keeps the products in lexicographic tuple order.
    // A new framework commutes with all earlier ones iff it commutes with
    // every cell built so far, i.e. iff every product is Hermitian.
    std::vector<Matrix> cells;
    for (const auto &p : frameworks.front().decomposition().cells()) {
        cells.push_back(p.matrix());
    }
    for (std::size_t i = 1; i < frameworks.size(); ++i) {
        std::vector<Matrix> next;
        for (const auto &c : cells) {
            for (const auto &d : frameworks[i].decomposition().cells()) {
                Matrix product = c * d.matrix();
                if (!product.is_hermitian()) {
                    throw incompatible();
                }
                if (!product.is_zero()) {
                    next.push_back(std::move(product));
                }
            }
        }
        cells = std::move(next);
    }
    if (label.empty()) {
        for (const auto &f : frameworks) {
            label += label.empty() ? f.label() : "*" + f.label();
        }
    }
    return {std::move(label), validate_decomposition(std::move(cells))};
}

Conjunction conjunction(const Projector &p, const Projector &q)
{
    if (!commutes(p, q)) {
        return Meaningless{};
    }
    return Projector(p.matrix() * q.matrix());
}

RefinedTruth refine_truth(const TruthFunctional &t, const Framework &fine)
{
    const auto *coarse = t.algebra().decomposition();
    if (coarse == nullptr) {
        throw Error(ErrorCode::AlgebraMismatch, "truth functional has no quantum decomposition");
    }
    if (!is_refinement(fine.decomposition(), *coarse)) {
        throw Error(ErrorCode::NotARefinement,
                    "'" + fine.label() + "' does not refine the functional's framework");
    }
    const Projector &true_cell = coarse->cell(t.selected_cell());
    const auto mask = membership_mask(fine.decomposition(), true_cell);
    std::vector<std::size_t> inside;
    for (auto k = mask->find_first(); k != CellMask::npos; k = mask->find_next(k)) {
        inside.push_back(k);
    }
    if (inside.size() == 1) {
        return UniqueTruth{TruthFunctional(fine.algebra(), inside.front())};
    }
    return Candidates{std::move(inside)};
}

std::vector<std::string> frameworks_containing(const Projector &p, const FrameworkSet &set)
{
    require_same_dim(p.dim(), set.dim());
    std::vector<std::string> labels;
    for (const auto &f : set.frameworks()) {
        if (membership_mask(f.decomposition(), p)) {
            labels.push_back(f.label());
        }
    }
    return labels;
}

TruthFunctional TruthAssignmentFamily::functional(const FrameworkSet &set,
                                                  std::string_view label) const
{
    const auto it = selected.find(label);
    if (it == selected.end()) {
        throw Error(ErrorCode::NotInFramework,
                    "family assigns nothing to '" + std::string(label) + "'");
    }
    return {set.find(label).algebra(), it->second};
}

std::optional<EfpViolation> check_every_framework_principle(const TruthAssignmentFamily &family,
                                                            const FrameworkSet &set)
{
    std::vector<TruthFunctional> thetas;
    thetas.reserve(set.size());
    for (const auto &f : set.frameworks()) {
        thetas.push_back(family.functional(set, f.label()));
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
        const Framework &fi = set.at(i);
        const std::uint64_t events = event_count(fi);
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            const Framework &fj = set.at(j);
            for (std::uint64_t bits = 0; bits < events; ++bits) {
                const Event e = fi.algebra().from_bits(bits);
                Projector p = fi.realize(e);
                const auto in_j = fj.membership(p);
                if (!in_j) {
                    continue;
                }
                const int vi = eval_truth(thetas[i], e);
                const int vj = eval_truth(thetas[j], *in_j);
                if (vi != vj) {
                    return EfpViolation{std::move(p), fi.label(), fj.label(), vi, vj};
                }
            }
        }
    }
    return std::nullopt;
}

std::string_view to_string(ConflictKind kind)
{
    switch (kind) {
    case ConflictKind::Identity: return "identity";
    case ConflictKind::Complement: return "complement";
    case ConflictKind::Product: return "product";
    case ConflictKind::NonCommutingTrue: return "non-commuting-true";
    }
    return "unknown";
}

std::optional<std::size_t> UniversalCandidate::find(const Projector &p) const
{
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].projector == p) {
            return i;
        }
    }
    return std::nullopt;
}

std::optional<int> UniversalCandidate::value_of(const Projector &p) const
{
    if (auto i = find(p)) {
        return entries[*i].value;
    }
    return std::nullopt;
}

UniversalCandidate build_universal_candidate(const TruthAssignmentFamily &family,
                                             const FrameworkSet &set)
{
    if (auto violation = check_every_framework_principle(family, set)) {
        throw Error(ErrorCode::InconsistentFamily,
                    "frameworks '" + violation->first + "' and '" + violation->second +
                        "' disagree on a shared projector");
    }
    UniversalCandidate candidate;
    std::unordered_map<std::string, std::size_t> by_key;
    for (const auto &f : set.frameworks()) {
        const TruthFunctional theta = family.functional(set, f.label());
        const std::uint64_t events = event_count(f);
        for (std::uint64_t bits = 0; bits < events; ++bits) {
            const Event e = f.algebra().from_bits(bits);
            Projector p = f.realize(e);
            const auto [it, inserted] = by_key.emplace(p.matrix().key(), candidate.entries.size());
            if (inserted) {
                candidate.entries.push_back({std::move(p), eval_truth(theta, e), {f.label()}});
            } else {
                candidate.entries[it->second].labels.push_back(f.label());
            }
        }
    }

    auto &conflicts = candidate.conflicts;
    const std::size_t n = candidate.entries.size();
    const auto lookup = [&](const Matrix &m) -> std::optional<std::size_t> {
        const auto it = by_key.find(m.key());
        if (it == by_key.end()) {
            return std::nullopt;
        }
        return it->second;
    };

    if (const auto id = lookup(Matrix::identity(set.dim()));
        id && candidate.entries[*id].value != 1) {
        conflicts.push_back({ConflictKind::Identity, *id, *id});
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto &entry = candidate.entries[i];
        if (const auto c = lookup(complement(entry.projector).matrix());
            c && candidate.entries[*c].value != 1 - entry.value) {
            conflicts.push_back({ConflictKind::Complement, i, *c});
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto &p = candidate.entries[i];
            const auto &q = candidate.entries[j];
            const Matrix pq = p.projector.matrix() * q.projector.matrix();
            const bool commuting = pq == q.projector.matrix() * p.projector.matrix();
            if (!commuting) {
                if (p.value == 1 && q.value == 1) {
                    conflicts.push_back({ConflictKind::NonCommutingTrue, i, j});
                }
                continue;
            }
            if (const auto k = lookup(pq); k && candidate.entries[*k].value != p.value * q.value) {
                conflicts.push_back({ConflictKind::Product, i, j});
            }
        }
    }
    return candidate;
}

std::string_view to_string(QueryAnswer answer)
{
    switch (answer) {
    case QueryAnswer::True: return "TRUE";
    case QueryAnswer::False: return "FALSE";
    case QueryAnswer::MeaninglessInThisFramework: return "MEANINGLESS_IN_THIS_FRAMEWORK";
    }
    return "unknown";
}

ReasoningSession ReasoningSession::open(Framework framework)
{
    ReasoningSession session(std::move(framework));
    session.log_.push_back({"open", session.active_.label(), true});
    return session;
}

void ReasoningSession::assert_cell(std::size_t cell)
{
    if (cell >= active_.size()) {
        log_.push_back({"assert", "cell " + std::to_string(cell + 1), false});
        throw Error(ErrorCode::NotInFramework, "framework '" + active_.label() + "' has no cell " +
                                                   std::to_string(cell + 1));
    }
    asserted_ = cell;
    log_.push_back({"assert", "cell " + std::to_string(cell + 1), true});
}

QueryAnswer ReasoningSession::query(const Projector &p)
{
    const auto event = active_.membership(p);
    if (!event) {
        log_.push_back({"query", "outside " + active_.label(), false});
        return QueryAnswer::MeaninglessInThisFramework;
    }
    if (!asserted_) {
        log_.push_back({"query", event->to_string(), false});
        throw Error(ErrorCode::NoAssertedTruth, "no cell of '" + active_.label() + "' is asserted");
    }
    const int value = eval_truth(TruthFunctional(active_.algebra(), *asserted_), *event);
    log_.push_back({"query", event->to_string(), true});
    return value == 1 ? QueryAnswer::True : QueryAnswer::False;
}

void ReasoningSession::refine(Framework fine, std::optional<std::size_t> chosen_cell)
{
    if (!is_refinement(fine, active_)) {
        log_.push_back({"refine", fine.label(), false});
        throw Error(ErrorCode::NotARefinement,
                    "'" + fine.label() + "' does not refine '" + active_.label() + "'");
    }
    std::optional<std::size_t> carried;
    if (asserted_) {
        const auto refined = refine_truth(TruthFunctional(active_.algebra(), *asserted_), fine);
        if (const auto *unique = std::get_if<UniqueTruth>(&refined)) {
            carried = unique->theta.selected_cell();
        } else {
            const auto &cells = std::get<Candidates>(refined).cells;
            if (!chosen_cell) {
                log_.push_back({"refine", fine.label(), false});
                throw Error(ErrorCode::AmbiguousRefinement,
                            std::to_string(cells.size()) + " cells of '" + fine.label() +
                                "' are compatible with the asserted truth");
            }
            if (std::find(cells.begin(), cells.end(), *chosen_cell) == cells.end()) {
                log_.push_back({"refine", fine.label(), false});
                throw Error(ErrorCode::NotInFramework,
                            "chosen cell is not inside the asserted coarse cell");
            }
            carried = chosen_cell;
        }
    }
    log_.push_back({"refine", fine.label(), true});
    active_ = std::move(fine);
    asserted_ = carried;
}

FrameworkSet s0s1s2_frameworks()
{
    const Vector e1{1, 0, 0};
    const Vector e2{0, 1, 0};
    const Vector e3{0, 0, 1};
    const Vector plus{0, 1, 1};
    const Vector minus{0, 1, -1};
    const Projector a = projector_from_ray(e1);
    std::vector<Framework> frameworks;
    frameworks.emplace_back("S0", validate_decomposition(std::vector<Projector>{a, complement(a)}));
    frameworks.emplace_back("S1", validate_decomposition(std::vector<Projector>{
                                      a, projector_from_ray(e2), projector_from_ray(e3)}));
    frameworks.emplace_back("S2", validate_decomposition(std::vector<Projector>{
                                      a, projector_from_ray(plus), projector_from_ray(minus)}));
    return FrameworkSet(std::move(frameworks));
}

} // namespace chkit
