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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chkit/frameworks.hpp"
#include "chkit/hilbert.hpp"

namespace chkit {

struct RawRay {
    std::string id;
    Vector vector;
};

/// Unvalidated ray data as read from a file; contexts refer to ray ids.
struct RawRaySet {
    std::size_t dim = 0;
    std::vector<RawRay> rays;
    std::vector<std::vector<std::string>> contexts;
};

/**
 * @brief Rank-1 directions grouped into orthogonal bases.
 *
 * Rays are pairwise projectively distinct. Each context lists exactly dim
 * ray indices whose rays are pairwise orthogonal, so their projectors form
 * a decomposition of the identity.
 */
class RaySet {
  public:
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t size() const noexcept { return rays_.size(); }
    [[nodiscard]] const Vector &ray(std::size_t i) const { return rays_.at(i); }
    [[nodiscard]] const std::string &id(std::size_t i) const { return ids_.at(i); }
    [[nodiscard]] const std::vector<std::vector<std::size_t>> &contexts() const noexcept
    {
        return contexts_;
    }
    /// Number of contexts containing ray @p i.
    [[nodiscard]] std::size_t multiplicity(std::size_t i) const;

  private:
    std::size_t dim_ = 0;
    std::vector<Vector> rays_;
    std::vector<std::string> ids_;
    std::vector<std::vector<std::size_t>> contexts_;

    friend RaySet validate_rayset(const RawRaySet &raw);
};

/**
 * Merges projectively equal rays (the first id wins, later ids become
 * aliases) and checks every context. Errors: ZeroRay, DimMismatch,
 * ParseError for an unknown id, DuplicateRayConflict for a reused id with a
 * different direction or a context naming one ray twice, ContextNotABasis(i)
 * for a context of the wrong size or with a non-orthogonal pair.
 */
RaySet validate_rayset(const RawRaySet &raw);

/// Inverse of validate_rayset, for serialization.
RawRaySet to_raw(const RaySet &rays);

struct OrthogonalityGraph {
    /// Sorted neighbour lists.
    std::vector<std::vector<std::size_t>> adjacency;

    [[nodiscard]] std::size_t vertex_count() const noexcept { return adjacency.size(); }
    [[nodiscard]] std::size_t edge_count() const;
    [[nodiscard]] std::size_t degree(std::size_t v) const { return adjacency.at(v).size(); }
};

/// Edge iff the exact inner product vanishes.
OrthogonalityGraph orthogonality_graph(const RaySet &rays);

/// One value per ray. A valid assignment has exactly one 1 in every context
/// and never gives 1 to two orthogonal rays.
struct NoncontextualAssignment {
    std::vector<std::uint8_t> values;
};

/// Empty when valid, otherwise a description of the first broken constraint.
std::optional<std::string> verify_assignment(const RaySet &rays,
                                             const NoncontextualAssignment &assignment);

/// Every ray lies in an even number of contexts while the context count is
/// odd, so no assignment can have exactly one 1 per context.
struct ParityCertificate {
    std::vector<std::size_t> multiplicity;
    std::size_t context_count = 0;
};

std::optional<ParityCertificate> parity_certificate(const RaySet &rays);

struct SearchOptions {
    /// Worker threads for the root split; 0 uses the OpenMP default.
    int threads = 0;
    /// Keep searching after the first witness and count them all.
    bool enumerate_all = false;
};

struct SearchResult {
    bool exists = false;
    /// First witness in search order.
    std::optional<NoncontextualAssignment> witness;
    /// Branch assignments tried. Identical for every thread count.
    std::uint64_t nodes_explored = 0;
    /// Total witnesses; only meaningful with enumerate_all.
    std::uint64_t witness_count = 0;
};

/**
 * @brief Search for a {0,1} assignment satisfying every context.
 *
 * Backtracking over contexts in input order, trying rays of the first
 * context without a 1 in increasing index order. After each choice, zeros
 * are pushed to all orthogonal rays and contexts left with one open ray are
 * forced, to fixpoint. Root branches run in parallel; outcome, witness, and
 * node count do not depend on the thread count.
 */
SearchResult search_assignment(const RaySet &rays, const SearchOptions &options = {});

/// Single-threaded reference for search_assignment.
SearchResult search_assignment_serial(const RaySet &rays, bool enumerate_all = false);

/// Names accepted by builtin_dataset; "spin-dirs(n)" takes any n >= 1.
std::vector<std::string> builtin_dataset_names();

/**
 * cabello18: 18 rays in dim 4, 9 contexts, every ray in exactly 2.
 * peres24: the 24 joint eigenrays of the Mermin square lines in dim 4, one
 *   context per row and column.
 * spin-dirs(n): n spin-half bases along distinct rational directions.
 * s1s2-dim3: the two incompatible three-cell sample spaces sharing one ray.
 * Throws UnknownDataset.
 */
RaySet builtin_dataset(std::string_view name);

/// n spin-half bases: for each stereographic coordinate z, rays (1, z) and
/// (-conj(z), 1). Coordinates should be pairwise distinct and never antipodal.
RaySet spin_bases(const std::vector<Scalar> &coordinates);

/// One framework per context, labelled "C1", "C2", ...
FrameworkSet frameworks_from_rayset(const RaySet &rays);

} // namespace chkit
