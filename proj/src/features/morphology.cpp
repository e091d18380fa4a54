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

#include "depeval/features/morphology.hpp"

namespace depeval {

std::vector<std::pair<int, int>> disk_offsets(int radius) {
  std::vector<std::pair<int, int>> offsets;
  for (int dy = -radius; dy <= radius; ++dy) {
    for (int dx = -radius; dx <= radius; ++dx) {
      if (dy * dy + dx * dx <= radius * radius) offsets.emplace_back(dy, dx);
    }
  }
  return offsets;
}

GridB dilate_disk(const GridB& mask, int radius) {
  if (radius <= 0) return mask;
  const auto offsets = disk_offsets(radius);
  GridB out = GridB::Constant(mask.rows(), mask.cols(), false);
  for (Eigen::Index i = 0; i < mask.rows(); ++i) {
    for (Eigen::Index j = 0; j < mask.cols(); ++j) {
      if (!mask(i, j)) continue;
      for (const auto& [dy, dx] : offsets) {
        const Eigen::Index y = i + dy;
        const Eigen::Index x = j + dx;
        if (y >= 0 && y < mask.rows() && x >= 0 && x < mask.cols()) out(y, x) = true;
      }
    }
  }
  return out;
}

}  // namespace depeval
