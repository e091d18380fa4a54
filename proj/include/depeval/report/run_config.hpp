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

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "depeval/core/image.hpp"
#include "depeval/core/weight_table.hpp"
#include "depeval/densify/densify.hpp"
#include "depeval/features/extract.hpp"

namespace depeval {

// How per-image scores turn into one number per model. Per-image-mean
// averages finished per-image values; pixel-pooled weights every image by
// its domain pixel count (classical metrics pool their sufficient
// statistics exactly).
enum class Aggregation { kPerImageMean, kPixelPooled };

const char* aggregation_name(Aggregation mode);
Aggregation parse_aggregation(const std::string& name);

struct RunConfig {
  std::filesystem::path root;
  std::vector<std::string> models;  // empty = discover from the first frame

  std::filesystem::path weights_path;  // empty = builtin GIDAS table
  FeatureParams features;
  FeatureKind feature_kind = FeatureKind::kEdge;  // corners are opt-in
  double gamma = 1.0;
  std::vector<std::string> focus;  // super-class names; empty = all
  bool renormalize_present = false;
  Aggregation aggregation = Aggregation::kPerImageMean;

  DensifyMethod densify = DensifyMethod::kLinear;
  bool densify_gt = true;  // false = evaluate on the sparse ground truth as-is
  double png_scale_divisor = 256.0;

  // Models whose predictions are affine (scale/shift ambiguous) and must be
  // aligned to the ground truth before scoring. The fit pools the listed
  // sample ids ("scene/frame"); empty = first sample of the dataset.
  std::vector<std::string> affine_models;
  std::vector<std::string> affine_fit_frames;

  std::filesystem::path out_dir;  // empty = no files written
  bool write_csv = false;
  int jobs = 0;  // worker threads, 0 = hardware concurrency

  void check() const;
};

// Weight table selected by the config: loaded from weights_path, or the
// builtin table when the path is empty.
WeightTable config_weights(const RunConfig& cfg);

nlohmann::json run_config_to_json(const RunConfig& cfg);
// Rejects unknown keys.
RunConfig run_config_from_json(const nlohmann::json& j);
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace depeval
