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

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "depeval/core/errors.hpp"
#include "depeval/core/grid.hpp"

namespace depeval {

/// Per-pixel metric distance raster. `values` is in meters; `valid` marks pixels at which
/// the distance is defined. Immutable after construction by convention.
struct DepthMap {
  GridD values;
  GridB valid;

  int width() const { return static_cast<int>(values.cols()); }
  int height() const { return static_cast<int>(values.rows()); }
  std::int64_t valid_count() const { return valid.count(); }

  // values/valid same shape, every valid value finite and >= 0
  void check() const;
};

DepthMap make_depth(GridD values, GridB valid);
DepthMap make_dense_depth(GridD values);

/// Per-pixel class-ID raster plus the ID -> name table. kUnlabeled is a reserved sentinel
/// that never participates in class computations.
struct SegmentationMask {
  static constexpr std::uint16_t kUnlabeled = 0xFFFF;

  GridU16 labels;
  std::map<std::uint16_t, std::string> id_to_name;

  int width() const { return static_cast<int>(labels.cols()); }
  int height() const { return static_cast<int>(labels.rows()); }

  // every non-sentinel label must appear in id_to_name
  void check() const;

  /// IDs whose name matches one of `names` (case-insensitive).
  std::set<std::uint16_t> ids_named(const std::set<std::string>& names) const;
};

SegmentationMask all_unlabeled_mask(int height, int width);

struct RgbImage {
  GridU8 r, g, b;

  int width() const { return static_cast<int>(r.cols()); }
  int height() const { return static_cast<int>(r.rows()); }
  void check() const;

  /// Rec.601 luma: 0.299 R + 0.587 G + 0.114 B, in [0, 255].
  GridD grayscale() const;
};

enum class FeatureKind { kEdge, kCorner, kUnion };

const char* feature_kind_name(FeatureKind kind);
FeatureKind parse_feature_kind(const std::string& name);

/// Binary raster of dilated edge/corner feature pixels. An all-false map is legal.
struct FeatureMap {
  GridB active;
  FeatureKind kind = FeatureKind::kEdge;

  int width() const { return static_cast<int>(active.cols()); }
  int height() const { return static_cast<int>(active.rows()); }
  std::int64_t active_count() const { return active.count(); }
};

FeatureMap all_true_features(int height, int width, FeatureKind kind = FeatureKind::kUnion);

/// Checks that a (prediction, ground truth[, segmentation]) triple is evaluable: matching
/// dimensions and at least one valid ground-truth pixel. Throws otherwise; idempotent.
void validate_pair(const DepthMap& pred, const DepthMap& gt,
                   const SegmentationMask* seg = nullptr);

/// Pixels valid in both maps. Metrics are computed over this (optionally further masked).
GridB comparison_domain(const DepthMap& pred, const DepthMap& gt);

std::string lowercase(std::string s);

}  // namespace depeval
