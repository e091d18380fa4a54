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
#include <map>
#include <string>
#include <vector>

#include "depeval/core/image.hpp"

namespace depeval {

// One evaluation unit: an image with its ground truth, segmentation, and the
// per-model predictions.
struct SceneSample {
  std::string id;  // "<scene>/<frame>"
  RgbImage rgb;
  DepthMap gt;
  SegmentationMask seg;
  std::map<std::string, DepthMap> pred;
};

struct SampleRef {
  std::string scene;
  std::string frame;
  std::filesystem::path dir;

  std::string id() const { return scene + "/" + frame; }
};

// Frame directories under <root>/<scene>/<frame>/ containing rgb.png,
// sorted by scene then frame. The dataset-level name table labels.names is
// loaded when present; a frame-local labels.names overrides it.
std::vector<SampleRef> scan_dataset(const std::filesystem::path& root);

// Models to load are selected by name; pred/<model>.f32 wins over
// pred/<model>.png when both exist. A missing labels.png yields an
// all-unlabeled mask.
SceneSample load_sample(const SampleRef& ref, const std::vector<std::string>& models,
                        double png_scale_divisor,
                        const std::map<std::uint16_t, std::string>& default_names);

// Model names found under <dir>/pred (file stems, sorted, deduplicated).
std::vector<std::string> list_models(const std::filesystem::path& frame_dir);

}  // namespace depeval
