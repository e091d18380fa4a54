// Copyright 2026 the depeval authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <utility>
#include <vector>

#include "depeval/core/grid.hpp"

namespace depeval {

// (dy, dx) offsets of the Euclidean disk: dy^2 + dx^2 <= radius^2.
std::vector<std::pair<int, int>> disk_offsets(int radius);

GridB dilate_disk(const GridB& mask, int radius);

}  // namespace depeval
