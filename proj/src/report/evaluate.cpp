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

#include "depeval/report/evaluate.hpp"

#include <algorithm>
#include <cmath>

#include "depeval/features/extract.hpp"

namespace depeval {

void ComponentScores::check(double gamma) const {
  const double sum = gamma * (e_class + e_feature + e_global);
  const double tol = 1e-12 * std::max(1.0, std::abs(sum));
  if (std::abs(combined - sum) > tol) {
    raise(Errc::kBadFormat, "combined score does not match its components");
  }
}

namespace {

FeatureMap extract_features(const RgbImage& rgb, const RunConfig& cfg) {
  switch (cfg.feature_kind) {
    case FeatureKind::kEdge: return extract_edges(rgb, cfg.features);
    case FeatureKind::kCorner: return extract_corners(rgb, cfg.features);
    case FeatureKind::kUnion:
      return union_features(extract_edges(rgb, cfg.features),
                            extract_corners(rgb, cfg.features));
  }
  raise(Errc::kBadConfig, "unknown feature kind");
}

bool is_affine_model(const RunConfig& cfg, const std::string& model) {
  return std::find(cfg.affine_models.begin(), cfg.affine_models.end(), model) !=
         cfg.affine_models.end();
}

ClassComponentOptions component_options(const RunConfig& cfg) {
  ClassComponentOptions options;
  if (!cfg.focus.empty()) {
    std::set<std::string> focus;
    for (const std::string& name : cfg.focus) focus.insert(lowercase(name));
    options.focus = std::move(focus);
  }
  options.renormalize_present = cfg.renormalize_present;
  return options;
}

}  // namespace

PreparedSample prepare_sample(const SceneSample& sample, const RunConfig& cfg,
                              const WeightTable& weights,
                              const std::map<std::string, AffineFit>& fits) {
  if (sample.rgb.width() != sample.gt.width() || sample.rgb.height() != sample.gt.height()) {
    raise(Errc::kDimensionMismatch, "rgb and ground truth of '" + sample.id +
                                        "' have different dimensions");
  }

  PreparedSample prepared;
  prepared.id = sample.id;
  prepared.features = extract_features(sample.rgb, cfg);

  for (const auto& [model, pred] : sample.pred) {
    validate_pair(pred, sample.gt, &sample.seg);
    if (is_affine_model(cfg, model)) {
      const auto it = fits.find(model);
      const AffineFit fit =
          it != fits.end() ? it->second : fit_scale_shift(pred, sample.gt);
      AffineApplied applied = apply_affine(pred, fit);
      prepared.clamped[model] = applied.clamped;
      prepared.pred[model] = std::move(applied.depth);
    } else {
      prepared.clamped[model] = 0;
      prepared.pred[model] = pred;
    }
  }

  DepthMap gt = cfg.densify_gt ? densify(sample.gt, cfg.densify) : sample.gt;
  const std::set<std::uint16_t> sky_ids = sample.seg.ids_named(weights.sky_classes);
  prepared.gt = mask_sky(gt, sample.seg, sky_ids);
  prepared.seg = sample.seg;
  prepared.labeled = (prepared.seg.labels != SegmentationMask::kUnlabeled).any();
  return prepared;
}

ComponentScores evaluate_prepared(const PreparedSample& prepared, const std::string& model,
                                  const RunConfig& cfg, const WeightTable& weights) {
  const auto pred_it = prepared.pred.find(model);
  if (pred_it == prepared.pred.end()) {
    raise(Errc::kUnknownModel, "sample '" + prepared.id + "' has no prediction for '" +
                                   model + "'");
  }
  const DepthMap& pred = pred_it->second;
  const DepthMap& gt = prepared.gt;

  ComponentScores scores;
  const GridB domain = comparison_domain(pred, gt);
  scores.domain_pixels = domain.count();
  scores.acc = classical_accumulate(pred, gt, domain);
  scores.classical = classical_finalize(scores.acc);
  scores.e_global = scores.classical.at("mae");

  scores.labeled = prepared.labeled;
  if (prepared.labeled) {
    const ClassComponentOptions options = component_options(cfg);
    ClassErrorResult cls = class_component(pred, gt, prepared.seg, weights, options);
    ClassErrorResult feat =
        feature_component(pred, gt, prepared.seg, prepared.features, weights, options);
    scores.e_class = cls.value;
    scores.e_feature = feat.value;
    scores.per_class = std::move(cls.per_class);
    scores.per_class_feature = std::move(feat.per_class);
  }

  scores.combined = cfg.gamma * (scores.e_class + scores.e_feature + scores.e_global);
  const auto clamp_it = prepared.clamped.find(model);
  scores.clamped_pixels = clamp_it != prepared.clamped.end() ? clamp_it->second : 0;
  scores.check(cfg.gamma);
  return scores;
}

ComponentScores evaluate_sample(const SceneSample& sample, const std::string& model,
                                const RunConfig& cfg) {
  cfg.check();
  const WeightTable weights = config_weights(cfg);
  const PreparedSample prepared = prepare_sample(sample, cfg, weights);
  return evaluate_prepared(prepared, model, cfg, weights);
}

}  // namespace depeval
