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

// JSON readers and writers for the file formats. Readers throw ParseError
// for structural problems and the domain error for semantic ones (for
// example SumNotIdentity from a decomposition file). Cell indices in files
// are 1-based.

#include <string>

#include "json.hpp"

#include "chkit/classical.hpp"
#include "chkit/frameworks.hpp"
#include "chkit/hilbert.hpp"
#include "chkit/nogo.hpp"

namespace chkit::io {

using Json = nlohmann::ordered_json;

/// ["a","b","c","d"] for a + b sqrt2 + (c + d sqrt2) i.
Json scalar_to_json(const Scalar &s);
Scalar scalar_from_json(const Json &j);

Json vector_to_json(const Vector &v);
Vector vector_from_json(const Json &j);

Json matrix_to_json(const Matrix &m);
Matrix matrix_from_json(const Json &j);

/// { "dim": n, "cells": [ { "rank": r, "matrix": [[...]] }, ... ] }
Json decomposition_to_json(const DecompositionOfIdentity &d);
DecompositionOfIdentity decomposition_from_json(const Json &j);

/// { "dim": n, "frameworks": [ { "label": "S1", "cells": [matrix, ...] }, ... ] }
Json framework_set_to_json(const FrameworkSet &set);
FrameworkSet framework_set_from_json(const Json &j);

/// { "assignments": { "S1": 2, ... } }
Json family_to_json(const TruthAssignmentFamily &family);
TruthAssignmentFamily family_from_json(const Json &j);

struct LoadedPartition {
    PhaseSpace space;
    CoarseGraining graining;
};

/// { "points": [id, ...], "cells": [[id, ...], ...] }
Json partition_to_json(const PhaseSpace &space, const CoarseGraining &graining);
LoadedPartition partition_from_json(const Json &j);

/// { "dim": n, "rays": [ { "id": "r1", "vector": [...] }, ... ], "contexts": [[...], ...] }
Json rayset_to_json(const RaySet &rays);
RawRaySet raw_rayset_from_json(const Json &j);
RaySet rayset_from_json(const Json &j);

/// Reads and parses a JSON file. Throws ParseError.
Json read_json_file(const std::string &path);

} // namespace chkit::io
