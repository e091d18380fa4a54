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

#include "depeval/densify/nearest.hpp"

#include <limits>
#include <vector>

#include "depeval/core/errors.hpp"

namespace depeval {

GridI64 nearest_valid_index(const GridB& valid) {
  const Eigen::Index h = valid.rows();
  const Eigen::Index w = valid.cols();
  if (!valid.any()) raise(Errc::kTooSparse, "no valid pixel to propagate");

  // Phase 1: nearest valid row within each column.
  constexpr std::int64_t kFar = std::numeric_limits<std::int64_t>::max() / 4;
  GridI64 row_site = GridI64::Constant(h, w, -1);
  GridI64 row_dist = GridI64::Constant(h, w, kFar);
  for (Eigen::Index j = 0; j < w; ++j) {
    Eigen::Index last = -1;
    for (Eigen::Index i = 0; i < h; ++i) {
      if (valid(i, j)) last = i;
      if (last >= 0) {
        row_site(i, j) = last;
        row_dist(i, j) = i - last;
      }
    }
    Eigen::Index next = -1;
    for (Eigen::Index i = h - 1; i >= 0; --i) {
      if (valid(i, j)) next = i;
      if (next >= 0 && next - i < row_dist(i, j)) {
        row_site(i, j) = next;
        row_dist(i, j) = next - i;
      }
    }
  }

  // Phase 2: lower envelope of the per-column parabolas along each row.
  GridI64 out = GridI64::Constant(h, w, -1);
  std::vector<Eigen::Index> v(w);      // columns of envelope parabolas
  std::vector<double> z(w + 1);        // envelope breakpoints
  for (Eigen::Index i = 0; i < h; ++i) {
    int k = -1;
    for (Eigen::Index q = 0; q < w; ++q) {
      if (row_site(i, q) < 0) continue;
      const double fq = static_cast<double>(row_dist(i, q) * row_dist(i, q));
      while (k >= 0) {
        const Eigen::Index p = v[k];
        const double fp = static_cast<double>(row_dist(i, p) * row_dist(i, p));
        const double s = (fq + static_cast<double>(q * q) - fp -
                          static_cast<double>(p * p)) /
                         (2.0 * static_cast<double>(q - p));
        if (s <= z[k]) {
          --k;
        } else {
          ++k;
          v[k] = q;
          z[k] = s;
          z[k + 1] = std::numeric_limits<double>::infinity();
          break;
        }
      }
      if (k < 0) {
        k = 0;
        v[0] = q;
        z[0] = -std::numeric_limits<double>::infinity();
        z[1] = std::numeric_limits<double>::infinity();
      }
    }
    int idx = 0;
    for (Eigen::Index q = 0; q < w; ++q) {
      while (z[idx + 1] < static_cast<double>(q)) ++idx;
      const Eigen::Index col = v[idx];
      out(i, q) = row_site(i, col) * w + col;
    }
  }
  return out;
}

}  // namespace depeval
