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
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "depeval/core/image.hpp"
#include "depeval/core/weight_table.hpp"

namespace depeval {

// Per-class distance statistics of one scene, from ground truth only.
struct ClassSceneStats {
  std::string class_name;
  double d_class_min = 0.0;  // min valid GT depth over the class
  double d_class = 0.0;      // d_scene_max - d_class_min
  double w_dist = 0.0;
  std::int64_t pixel_count = 0;  // valid GT pixels of the class
};

// Distance weights per class present in the scene. Classes without a valid
// GT pixel are absent. Class names are matched case-insensitively and
// reported lowercase. Degenerate cases: a single class gets w_dist = 1;
// all-equal d_class values with >= 2 classes all get w_dist = 1.
std::map<std::string, ClassSceneStats> intra_class_weights(const DepthMap& gt,
                                                           const SegmentationMask& seg);

// One addend of the class or feature component.
struct ClassContribution {
  std::string class_name;
  std::string super_class;      // empty when unmapped
  double w_class = 0.0;         // effective inter-class weight applied
  double w_dist = 0.0;
  double class_mae = 0.0;       // raw MAE over the class's scored pixels
  double weighted_error = 0.0;  // w_class * w_dist * class_mae
  std::int64_t pixel_count = 0;  // pixels scored for this class
  bool no_gt = false;        // class present in the mask but without valid GT
  bool no_features = false;  // feature intersection empty
  bool unmapped = false;     // no super-class mapping
};

struct ClassErrorResult {
  double value = 0.0;  // e_class or e_feature, meters
  std::vector<ClassContribution> per_class;  // sorted by class name
  std::int64_t pixels = 0;  // total scored pixels
};

struct ClassComponentOptions {
  // Lowercase super-class names to evaluate exclusively; their w_class is
  // renormalized to sum to 1.
  std::optional<std::set<std::string>> focus;
  // Renormalize w_class over the super-classes present in the image.
  bool renormalize_present = false;
};

ClassErrorResult class_component(const DepthMap& pred, const DepthMap& gt,
                                 const SegmentationMask& seg, const WeightTable& weights,
                                 const ClassComponentOptions& options = {});

// Same structure as class_component but every class's pixel set is
// intersected with the feature map before the MAE.
ClassErrorResult feature_component(const DepthMap& pred, const DepthMap& gt,
                                   const SegmentationMask& seg, const FeatureMap& features,
                                   const WeightTable& weights,
                                   const ClassComponentOptions& options = {});

// Per-super-class rollup of a component result.
struct SuperClassStats {
  std::string name;
  double weight = 0.0;        // effective w_class
  double inner_sum = 0.0;     // sum of w_dist * MAE over member classes
  double contribution = 0.0;  // weight * inner_sum
  std::int64_t pixel_count = 0;
};

std::vector<SuperClassStats> per_super_stats(const ClassErrorResult& result);

}  // namespace depeval
