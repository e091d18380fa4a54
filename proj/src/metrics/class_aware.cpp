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

#include "depeval/metrics/class_aware.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace depeval {

namespace {

// id -> dense class index, merging ids that share a lowercase name.
struct ClassIndex {
  std::vector<int> of_id = std::vector<int>(65536, -1);
  std::vector<std::string> names;  // lowercase, index order

  explicit ClassIndex(const SegmentationMask& seg) {
    std::map<std::string, int> index;
    for (const auto& [id, name] : seg.id_to_name) {
      const std::string key = lowercase(name);
      auto [it, fresh] = index.try_emplace(key, static_cast<int>(names.size()));
      if (fresh) names.push_back(key);
      of_id[id] = it->second;
    }
  }
};

}  // namespace

std::map<std::string, ClassSceneStats> intra_class_weights(const DepthMap& gt,
                                                           const SegmentationMask& seg) {
  if (!same_shape(gt.values, seg.labels)) {
    raise(Errc::kDimensionMismatch, "segmentation mask does not match the depth dimensions");
  }
  const ClassIndex classes(seg);

  std::vector<double> min_depth(classes.names.size(),
                                std::numeric_limits<double>::infinity());
  std::vector<std::int64_t> count(classes.names.size(), 0);
  double scene_max = -std::numeric_limits<double>::infinity();

  for (Eigen::Index i = 0; i < gt.values.rows(); ++i) {
    for (Eigen::Index j = 0; j < gt.values.cols(); ++j) {
      if (!gt.valid(i, j)) continue;
      const double v = gt.values(i, j);
      scene_max = std::max(scene_max, v);
      const std::uint16_t id = seg.labels(i, j);
      if (id == SegmentationMask::kUnlabeled) continue;
      const int idx = classes.of_id[id];
      if (idx < 0) {
        raise(Errc::kUnknownLabel, "label id " + std::to_string(id) + " has no name");
      }
      min_depth[idx] = std::min(min_depth[idx], v);
      count[idx] += 1;
    }
  }

  std::map<std::string, ClassSceneStats> stats;
  for (std::size_t idx = 0; idx < classes.names.size(); ++idx) {
    if (count[idx] == 0) continue;
    ClassSceneStats s;
    s.class_name = classes.names[idx];
    s.d_class_min = min_depth[idx];
    s.d_class = scene_max - min_depth[idx];
    s.pixel_count = count[idx];
    stats[s.class_name] = s;
  }
  if (stats.empty()) {
    raise(Errc::kNoLabeledPixels, "no labeled pixel with valid ground truth");
  }

  double d_min = std::numeric_limits<double>::infinity();
  double d_max = -std::numeric_limits<double>::infinity();
  for (const auto& [name, s] : stats) {
    d_min = std::min(d_min, s.d_class);
    d_max = std::max(d_max, s.d_class);
  }
  const double span = d_max - d_min;
  for (auto& [name, s] : stats) {
    // Single class or all-equal d_class: every class counts fully.
    s.w_dist = span > 0.0 ? (s.d_class - d_min) / span : 1.0;
  }
  return stats;
}

namespace {

// Shared core of class_component and feature_component; the two differ only
// in the pixel predicate, so the feature component with an all-true feature
// map reproduces the class component exactly.
ClassErrorResult weighted_component(const DepthMap& pred, const DepthMap& gt,
                                    const SegmentationMask& seg, const WeightTable& weights,
                                    const GridB* features, bool feature_mode,
                                    const ClassComponentOptions& options) {
  validate_pair(pred, gt, &seg);
  if (features != nullptr && !same_shape(*features, gt.values)) {
    raise(Errc::kDimensionMismatch, "feature map does not match the depth dimensions");
  }

  std::optional<std::set<std::string>> focus;
  if (options.focus) {
    focus.emplace();
    for (const auto& name : *options.focus) {
      const SuperClass* sc = weights.find_super(name);
      if (sc == nullptr) {
        raise(Errc::kBadConfig, "focus super-class '" + name + "' is not in the weight table");
      }
      focus->insert(lowercase(sc->name));
    }
  }

  const auto stats = intra_class_weights(gt, seg);
  const ClassIndex classes(seg);

  std::vector<double> err_sum(classes.names.size(), 0.0);
  std::vector<std::int64_t> err_count(classes.names.size(), 0);
  std::vector<std::int64_t> raster_count(classes.names.size(), 0);
  for (Eigen::Index i = 0; i < gt.values.rows(); ++i) {
    for (Eigen::Index j = 0; j < gt.values.cols(); ++j) {
      const std::uint16_t id = seg.labels(i, j);
      if (id == SegmentationMask::kUnlabeled) continue;
      const int idx = classes.of_id[id];
      raster_count[idx] += 1;
      if (!gt.valid(i, j) || !pred.valid(i, j)) continue;
      if (features != nullptr && !(*features)(i, j)) continue;
      err_sum[idx] += std::abs(pred.values(i, j) - gt.values(i, j));
      err_count[idx] += 1;
    }
  }

  // Resolve each present class; find which super-classes can be scored.
  struct Entry {
    int idx = 0;
    const SuperClass* super = nullptr;
    const ClassSceneStats* stats = nullptr;
  };
  std::map<std::string, Entry> entries;  // sorted by class name
  std::set<std::string> present_supers;  // lowercase, with >= 1 scored class
  for (std::size_t idx = 0; idx < classes.names.size(); ++idx) {
    if (raster_count[idx] == 0) continue;
    const std::string& name = classes.names[idx];
    Entry e;
    e.idx = static_cast<int>(idx);
    e.super = weights.super_for(name);
    const auto sit = stats.find(name);
    e.stats = sit == stats.end() ? nullptr : &sit->second;
    if (e.super == nullptr && weights.unmapped_policy == UnmappedPolicy::kError) {
      raise(Errc::kUnmappedClass, "class '" + name + "' has no super-class mapping");
    }
    if (focus && (e.super == nullptr || !focus->count(lowercase(e.super->name)))) {
      continue;  // out of focus
    }
    entries[name] = e;
    if (e.super != nullptr && e.stats != nullptr && err_count[idx] > 0) {
      present_supers.insert(lowercase(e.super->name));
    }
  }

  // Effective w_class after focus / presence renormalization.
  const auto effective_weight = [&](const SuperClass& sc) -> double {
    const std::set<std::string>* pool = nullptr;
    if (options.renormalize_present) pool = &present_supers;
    else if (focus) pool = &*focus;
    if (pool == nullptr) return sc.weight;
    if (!pool->count(lowercase(sc.name))) return 0.0;
    double total = 0.0;
    for (const auto& name : *pool) total += weights.find_super(name)->weight;
    if (total <= 0.0) return 1.0 / static_cast<double>(pool->size());
    return sc.weight / total;
  };

  ClassErrorResult result;
  for (const auto& [name, e] : entries) {
    ClassContribution c;
    c.class_name = name;
    if (e.super != nullptr) c.super_class = e.super->name;
    c.unmapped = e.super == nullptr;
    if (c.unmapped && weights.unmapped_policy == UnmappedPolicy::kIgnore) {
      // Listed for transparency, not scored.
      result.per_class.push_back(std::move(c));
      continue;
    }
    if (e.stats == nullptr) {
      c.no_gt = true;  // in the mask but no valid GT pixel
      result.per_class.push_back(std::move(c));
      continue;
    }
    c.w_dist = e.stats->w_dist;
    if (err_count[e.idx] == 0) {
      c.no_features = feature_mode;
      result.per_class.push_back(std::move(c));
      continue;
    }
    // Unmapped classes under the zero policy are scored with w_class = 0.
    c.class_mae = err_sum[e.idx] / static_cast<double>(err_count[e.idx]);
    c.pixel_count = err_count[e.idx];
    c.w_class = e.super != nullptr ? effective_weight(*e.super) : 0.0;
    c.weighted_error = c.w_class * c.w_dist * c.class_mae;
    result.value += c.weighted_error;
    result.pixels += c.pixel_count;
    result.per_class.push_back(std::move(c));
  }

  return result;
}

}  // namespace

ClassErrorResult class_component(const DepthMap& pred, const DepthMap& gt,
                                 const SegmentationMask& seg, const WeightTable& weights,
                                 const ClassComponentOptions& options) {
  return weighted_component(pred, gt, seg, weights, nullptr, false, options);
}

ClassErrorResult feature_component(const DepthMap& pred, const DepthMap& gt,
                                   const SegmentationMask& seg, const FeatureMap& features,
                                   const WeightTable& weights,
                                   const ClassComponentOptions& options) {
  return weighted_component(pred, gt, seg, weights, &features.active, true, options);
}

std::vector<SuperClassStats> per_super_stats(const ClassErrorResult& result) {
  std::map<std::string, SuperClassStats> by_super;
  for (const auto& c : result.per_class) {
    if (c.super_class.empty()) continue;
    SuperClassStats& s = by_super.try_emplace(c.super_class).first->second;
    s.name = c.super_class;
    if (c.pixel_count > 0) s.weight = c.w_class;
    s.inner_sum += c.w_dist * c.class_mae;
    s.contribution += c.weighted_error;
    s.pixel_count += c.pixel_count;
  }
  std::vector<SuperClassStats> out;
  out.reserve(by_super.size());
  for (auto& [name, s] : by_super) out.push_back(std::move(s));
  return out;
}

}  // namespace depeval
