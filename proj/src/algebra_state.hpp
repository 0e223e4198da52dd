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
#include <memory>
#include <variant>

#include "chkit/events.hpp"

namespace chkit::detail {

struct AlgebraState {
    std::size_t n_cells;
    std::variant<std::monostate, std::shared_ptr<const DecompositionOfIdentity>,
                 std::shared_ptr<const Partition>>
        backing;
};

// Defined in classical.cpp so events does not need the full Partition.
std::size_t partition_size(const Partition &partition);

} // namespace chkit::detail
