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

#include "depeval/report/run_config.hpp"

#include <fstream>
#include <set>

namespace depeval {

const char* aggregation_name(Aggregation mode) {
  switch (mode) {
    case Aggregation::kPerImageMean: return "per-image-mean";
    case Aggregation::kPixelPooled: return "pixel-pooled";
  }
  return "unknown";
}

Aggregation parse_aggregation(const std::string& name) {
  const std::string n = lowercase(name);
  if (n == "per-image-mean") return Aggregation::kPerImageMean;
  if (n == "pixel-pooled") return Aggregation::kPixelPooled;
  raise(Errc::kBadConfig, "unknown aggregation mode '" + name + "'");
}

void RunConfig::check() const {
  if (!(gamma > 0.0)) raise(Errc::kBadConfig, "gamma must be > 0");
  if (!(png_scale_divisor > 0.0)) raise(Errc::kBadConfig, "png_scale_divisor must be > 0");
  if (jobs < 0) raise(Errc::kBadConfig, "jobs must be >= 0");
  features.check();
}

WeightTable config_weights(const RunConfig& cfg) {
  WeightTable table =
      cfg.weights_path.empty() ? builtin_gidas_table() : load_weight_table(cfg.weights_path);
  table.validate();
  return table;
}

namespace {

nlohmann::json features_to_json(const FeatureParams& p) {
  return nlohmann::json{
      {"edge_low", p.edge_low},
      {"edge_high", p.edge_high},
      {"edge_thickness", p.edge_thickness},
      {"corner_k", p.corner_k},
      {"corner_rel_threshold", p.corner_rel_threshold},
      {"corner_radius", p.corner_radius},
      {"window", p.window},
  };
}

void reject_unknown_keys(const nlohmann::json& j, const std::set<std::string>& known,
                         const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) raise(Errc::kBadConfig, where + ": unknown key '" + key + "'");
  }
}

FeatureParams features_from_json(const nlohmann::json& j) {
  reject_unknown_keys(j,
                      {"edge_low", "edge_high", "edge_thickness", "corner_k",
                       "corner_rel_threshold", "corner_radius", "window"},
                      "features");
  FeatureParams p;
  p.edge_low = j.value("edge_low", p.edge_low);
  p.edge_high = j.value("edge_high", p.edge_high);
  p.edge_thickness = j.value("edge_thickness", p.edge_thickness);
  p.corner_k = j.value("corner_k", p.corner_k);
  p.corner_rel_threshold = j.value("corner_rel_threshold", p.corner_rel_threshold);
  p.corner_radius = j.value("corner_radius", p.corner_radius);
  p.window = j.value("window", p.window);
  return p;
}

}  // namespace

nlohmann::json run_config_to_json(const RunConfig& cfg) {
  return nlohmann::json{
      {"root", cfg.root.string()},
      {"models", cfg.models},
      {"weights", cfg.weights_path.string()},
      {"features", features_to_json(cfg.features)},
      {"feature_kind", feature_kind_name(cfg.feature_kind)},
      {"gamma", cfg.gamma},
      {"focus", cfg.focus},
      {"renormalize_present", cfg.renormalize_present},
      {"aggregation", aggregation_name(cfg.aggregation)},
      {"densify", densify_method_name(cfg.densify)},
      {"densify_gt", cfg.densify_gt},
      {"png_scale_divisor", cfg.png_scale_divisor},
      {"affine_models", cfg.affine_models},
      {"affine_fit_frames", cfg.affine_fit_frames},
      {"out_dir", cfg.out_dir.string()},
      {"write_csv", cfg.write_csv},
      {"jobs", cfg.jobs},
  };
}

RunConfig run_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) raise(Errc::kBadConfig, "config must be a JSON object");
  reject_unknown_keys(j,
                      {"root", "models", "weights", "features", "feature_kind", "gamma",
                       "focus", "renormalize_present", "aggregation", "densify", "densify_gt",
                       "png_scale_divisor", "affine_models", "affine_fit_frames", "out_dir",
                       "write_csv", "jobs"},
                      "config");
  RunConfig cfg;
  try {
    cfg.root = j.value("root", std::string());
    cfg.models = j.value("models", cfg.models);
    cfg.weights_path = j.value("weights", std::string());
    if (j.contains("features")) cfg.features = features_from_json(j.at("features"));
    if (j.contains("feature_kind")) {
      cfg.feature_kind = parse_feature_kind(j.at("feature_kind").get<std::string>());
    }
    cfg.gamma = j.value("gamma", cfg.gamma);
    cfg.focus = j.value("focus", cfg.focus);
    cfg.renormalize_present = j.value("renormalize_present", cfg.renormalize_present);
    if (j.contains("aggregation")) {
      cfg.aggregation = parse_aggregation(j.at("aggregation").get<std::string>());
    }
    if (j.contains("densify")) {
      cfg.densify = parse_densify_method(j.at("densify").get<std::string>());
    }
    cfg.densify_gt = j.value("densify_gt", cfg.densify_gt);
    cfg.png_scale_divisor = j.value("png_scale_divisor", cfg.png_scale_divisor);
    cfg.affine_models = j.value("affine_models", cfg.affine_models);
    cfg.affine_fit_frames = j.value("affine_fit_frames", cfg.affine_fit_frames);
    cfg.out_dir = j.value("out_dir", std::string());
    cfg.write_csv = j.value("write_csv", cfg.write_csv);
    cfg.jobs = j.value("jobs", cfg.jobs);
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::kBadConfig, std::string("config: ") + e.what());
  }
  cfg.check();
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) raise(Errc::kIoError, "cannot open config '" + path.string() + "'");
  nlohmann::json j;
  try {
    file >> j;
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::kBadConfig, path.string() + ": " + e.what());
  }
  return run_config_from_json(j);
}

}  // namespace depeval
