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

// Lossy import of floating-point ray data. The library itself never sees a
// float: values are snapped to exact field elements here, or refused.

#include <optional>

#include "chkit/exactnum.hpp"
#include "chkit/io.hpp"

namespace chkit::cli {

inline constexpr double kDefaultSnapTolerance = 1e-9;

/// Nearest p/q (q <= 10^4) or b*sqrt2 (b = p/q) within @p tol of @p x.
std::optional<Scalar> snap_real(double x, double tol);

/// Copy of a RaySet document with every float scalar replaced by its exact
/// encoding. A float scalar is a JSON number (real) or a pair [re, im] of
/// numbers; exact 4-string scalars pass through. Throws ParseError naming
/// the first value that cannot be snapped within @p tol.
io::Json snap_rayset(const io::Json &doc, double tol);

/// True if any ray component uses the float form.
bool has_float_scalars(const io::Json &doc);

} // namespace chkit::cli
