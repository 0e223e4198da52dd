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

// Random exact models shared by the unit tests, the acceptance suite and the
// benchmarks. Everything is seeded, so failures reproduce.

#include <cstdint>
#include <random>
#include <vector>

#include "chkit/classical.hpp"
#include "chkit/frameworks.hpp"
#include "chkit/hilbert.hpp"
#include "chkit/nogo.hpp"

namespace chkit::testing {

using Rng = std::mt19937_64;

/// p/q with |p| <= max_abs and 1 <= q <= max_den.
Rational random_rational(Rng &rng, long max_abs = 5, long max_den = 4);
/// All four components random.
Scalar random_scalar(Rng &rng, long max_abs = 5, long max_den = 4);
/// Non-zero vector with small Gaussian-integer entries, sometimes with sqrt2 parts.
Vector random_vector(Rng &rng, std::size_t dim);

/// I - 2 v v^dagger / (v^dagger v): exactly unitary and Hermitian.
Matrix householder(const Vector &v);
/// Product of @p reflections random Householder reflections.
Matrix random_unitary(Rng &rng, std::size_t dim, int reflections = 2);

/// Random split of 0..n-1 into k non-empty groups (k <= n), groups in
/// increasing order of their smallest member.
std::vector<std::vector<std::size_t>> random_grouping(Rng &rng, std::size_t n, std::size_t k);

/// U diag(group indicator) U^dagger for a random grouping of the basis.
DecompositionOfIdentity random_decomposition(Rng &rng, std::size_t dim, std::size_t n_cells);

/// Cells of @p fine summed according to @p groups.
DecompositionOfIdentity coarsen(const DecompositionOfIdentity &fine,
                                const std::vector<std::vector<std::size_t>> &groups);

/// Random labels in [0, k) for each of @p n_points points; every label used.
std::vector<std::size_t> random_labels(Rng &rng, std::size_t n_points, std::size_t k);

/// Rank-1 projector along a random direction.
Projector random_ray_projector(Rng &rng, std::size_t dim);

/// n spin-half bases along random distinct, non-antipodal directions.
RaySet random_spin_bases(Rng &rng, std::size_t n);

} // namespace chkit::testing
