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

#include <optional>
#include <string>

#include "chkit/classical.hpp"
#include "chkit/io.hpp"

namespace chkit::cli {

using io::Json;

/// A command's structured result; the text form is rendered from it.
struct Report {
    Json body;
    /// Set when --expect was given: whether the semantic outcome matched.
    std::optional<bool> expectation_met;
};

/// Indented "key: value" rendering of a report. Exact scalars print in
/// their readable form, matrices one row per line.
std::string render_text(const Json &report);

struct OscillatorOptions {
    std::size_t steps = 100;
    std::string lo = "-2";
    std::string hi = "2";
    std::string e0 = "1";
    /// Grid id "i,j" of the sampled point; empty picks the grid centre.
    std::string point;
};

Report demo_spin_half();
Report demo_s0s1s2();
Report demo_classical_oscillator(const OscillatorOptions &options);
Report ks_report(const RaySet &rays, const std::string &source, bool enumerate, bool certificate,
                 int threads);

} // namespace chkit::cli
