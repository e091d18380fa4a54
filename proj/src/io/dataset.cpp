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

#include "depeval/io/dataset.hpp"

#include <algorithm>

#include "depeval/io/depth_io.hpp"

namespace depeval {

namespace fs = std::filesystem;

std::vector<SampleRef> scan_dataset(const fs::path& root) {
  if (!fs::is_directory(root)) {
    raise(Errc::kIoError, "dataset root '" + root.string() + "' is not a directory");
  }
  std::vector<SampleRef> refs;
  for (const auto& scene_entry : fs::directory_iterator(root)) {
    if (!scene_entry.is_directory()) continue;
    const std::string scene = scene_entry.path().filename().string();
    if (scene.empty() || scene.front() == '.') continue;
    for (const auto& frame_entry : fs::directory_iterator(scene_entry.path())) {
      if (!frame_entry.is_directory()) continue;
      const std::string frame = frame_entry.path().filename().string();
      if (frame.empty() || frame.front() == '.') continue;
      if (!fs::exists(frame_entry.path() / "rgb.png")) continue;
      refs.push_back({scene, frame, frame_entry.path()});
    }
  }
  std::sort(refs.begin(), refs.end(), [](const SampleRef& a, const SampleRef& b) {
    if (a.scene != b.scene) return a.scene < b.scene;
    return a.frame < b.frame;
  });
  if (refs.empty()) {
    raise(Errc::kEmptyDataset, "no frame directories with rgb.png under '" +
                                   root.string() + "'");
  }
  return refs;
}

namespace {

DepthMap load_depth_either(const fs::path& stem_f32, const fs::path& stem_png,
                           double divisor, const std::string& what) {
  if (fs::exists(stem_f32)) return read_depth_f32(stem_f32);
  if (fs::exists(stem_png)) return read_depth_png16(stem_png, divisor);
  raise(Errc::kIoError, "missing " + what + ": neither '" + stem_f32.string() +
                            "' nor '" + stem_png.string() + "' exists");
}

}  // namespace

std::vector<std::string> list_models(const fs::path& frame_dir) {
  std::vector<std::string> models;
  const fs::path pred_dir = frame_dir / "pred";
  if (!fs::is_directory(pred_dir)) return models;
  for (const auto& entry : fs::directory_iterator(pred_dir)) {
    if (!entry.is_regular_file()) continue;
    const fs::path p = entry.path();
    if (p.extension() != ".png" && p.extension() != ".f32") continue;
    models.push_back(p.stem().string());
  }
  std::sort(models.begin(), models.end());
  models.erase(std::unique(models.begin(), models.end()), models.end());
  return models;
}

SceneSample load_sample(const SampleRef& ref, const std::vector<std::string>& models,
                        double png_scale_divisor,
                        const std::map<std::uint16_t, std::string>& default_names) {
  SceneSample sample;
  sample.id = ref.id();
  sample.rgb = read_rgb(ref.dir / "rgb.png");
  sample.gt = load_depth_either(ref.dir / "gt.f32", ref.dir / "gt.png",
                                png_scale_divisor, "ground truth");

  const fs::path local_names = ref.dir / "labels.names";
  const auto names = fs::exists(local_names) ? read_name_table(local_names) : default_names;
  const fs::path labels = ref.dir / "labels.png";
  if (fs::exists(labels)) {
    sample.seg = read_labels_png(labels, names);
  } else {
    sample.seg = all_unlabeled_mask(static_cast<int>(sample.gt.height()),
                                    static_cast<int>(sample.gt.width()));
  }

  for (const std::string& model : models) {
    const fs::path pred_dir = ref.dir / "pred";
    try {
      sample.pred[model] = load_depth_either(pred_dir / (model + ".f32"),
                                             pred_dir / (model + ".png"),
                                             png_scale_divisor, "prediction");
    } catch (const Error& e) {
      if (e.code() == Errc::kIoError) {
        raise(Errc::kUnknownModel,
              "model '" + model + "' has no prediction in '" + pred_dir.string() + "'");
      }
      throw;
    }
  }
  return sample;
}

}  // namespace depeval
