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

#include "depeval/densify/densify.hpp"

#include <vector>

#include "depeval/densify/delaunay.hpp"
#include "depeval/densify/nearest.hpp"

namespace depeval {

const char* densify_method_name(DensifyMethod method) {
  return method == DensifyMethod::kNearest ? "nearest" : "linear";
}

DensifyMethod parse_densify_method(const std::string& name) {
  const std::string n = lowercase(name);
  if (n == "nearest") return DensifyMethod::kNearest;
  if (n == "linear") return DensifyMethod::kLinear;
  raise(Errc::kBadConfig, "unknown densify method '" + name + "'");
}

DepthMap densify(const DepthMap& sparse, DensifyMethod method) {
  sparse.check();
  const Eigen::Index h = sparse.values.rows();
  const Eigen::Index w = sparse.values.cols();
  const std::int64_t valid_count = sparse.valid_count();
  if (method == DensifyMethod::kNearest && valid_count < 1) {
    raise(Errc::kTooSparse, "nearest densification needs at least 1 valid pixel");
  }
  if (method == DensifyMethod::kLinear && valid_count < 3) {
    raise(Errc::kTooSparse, "linear densification needs at least 3 valid pixels");
  }
  if (valid_count == h * w) return sparse;

  DepthMap dense;
  dense.values = sparse.values;
  dense.valid = GridB::Constant(h, w, true);

  const GridI64 nearest = nearest_valid_index(sparse.valid);
  const auto nearest_value = [&](Eigen::Index i, Eigen::Index j) {
    const std::int64_t flat = nearest(i, j);
    return sparse.values(flat / w, flat % w);
  };

  if (method == DensifyMethod::kNearest) {
    for (Eigen::Index i = 0; i < h; ++i) {
      for (Eigen::Index j = 0; j < w; ++j) {
        if (!sparse.valid(i, j)) dense.values(i, j) = nearest_value(i, j);
      }
    }
    return dense;
  }

  std::vector<Delaunay::Point> sites;
  std::vector<double> site_values;
  sites.reserve(valid_count);
  site_values.reserve(valid_count);
  for (Eigen::Index i = 0; i < h; ++i) {
    for (Eigen::Index j = 0; j < w; ++j) {
      if (!sparse.valid(i, j)) continue;
      sites.push_back({j, i});
      site_values.push_back(sparse.values(i, j));
    }
  }
  const Delaunay mesh(sites);

  int hint = -1;
  for (Eigen::Index i = 0; i < h; ++i) {
    for (Eigen::Index j = 0; j < w; ++j) {
      if (sparse.valid(i, j)) continue;
      const auto hit = mesh.interpolate(j, i, &hint);
      if (hit) {
        double v = 0.0;
        for (int k = 0; k < 3; ++k) {
          v += hit->weights[k] * site_values[hit->vertices[k]];
        }
        dense.values(i, j) = v;
      } else {
        dense.values(i, j) = nearest_value(i, j);
      }
    }
  }
  return dense;
}

DepthMap mask_sky(const DepthMap& depth, const SegmentationMask& seg,
                  const std::set<std::uint16_t>& sky_ids) {
  if (!same_shape(depth.values, seg.labels)) {
    raise(Errc::kDimensionMismatch, "segmentation mask does not match the depth dimensions");
  }
  if (sky_ids.empty()) return depth;
  DepthMap out = depth;
  for (Eigen::Index i = 0; i < depth.values.rows(); ++i) {
    for (Eigen::Index j = 0; j < depth.values.cols(); ++j) {
      if (sky_ids.count(seg.labels(i, j))) out.valid(i, j) = false;
    }
  }
  return out;
}

}  // namespace depeval
