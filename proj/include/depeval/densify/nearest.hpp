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

#include "depeval/core/grid.hpp"

namespace depeval {

// Flat index (row * width + col) of the Euclidean-nearest true pixel, for
// every pixel. Exact distances via the two-phase parabolic envelope
// transform; ties resolve deterministically.
GridI64 nearest_valid_index(const GridB& valid);

}  // namespace depeval
