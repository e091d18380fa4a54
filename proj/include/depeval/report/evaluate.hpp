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
#include <string>
#include <vector>

#include "depeval/align/affine.hpp"
#include "depeval/io/dataset.hpp"
#include "depeval/metrics/class_aware.hpp"
#include "depeval/metrics/classical.hpp"
#include "depeval/report/run_config.hpp"

namespace depeval {

// All scores of one (sample, model) pair. combined is
// gamma * (e_class + e_feature + e_global).
struct ComponentScores {
  double e_class = 0.0;
  double e_feature = 0.0;
  double e_global = 0.0;
  double combined = 0.0;

  std::vector<ClassContribution> per_class;          // class component breakdown
  std::vector<ClassContribution> per_class_feature;  // feature component breakdown
  std::map<std::string, double> classical;
  ClassicalAcc acc;  // pixel statistics, mergeable across images

  std::int64_t domain_pixels = 0;
  std::int64_t clamped_pixels = 0;  // negatives clamped by affine alignment
  bool labeled = true;  // false = no labeled pixel, class terms forced to 0

  // combined must equal gamma * (sum of components) up to rounding.
  void check(double gamma) const;
};

// Per-sample state shared across models: ground truth densified and
// sky-masked once, features extracted from the RGB input once, affine
// models already aligned.
struct PreparedSample {
  std::string id;
  DepthMap gt;
  SegmentationMask seg;
  FeatureMap features;
  bool labeled = true;
  std::map<std::string, DepthMap> pred;
  std::map<std::string, std::int64_t> clamped;
};

// Affine fits in `fits` are applied to the matching cfg.affine_models
// entries; an affine model without a precomputed fit is fitted against this
// sample's raw (sparse) ground truth.
PreparedSample prepare_sample(const SceneSample& sample, const RunConfig& cfg,
                              const WeightTable& weights,
                              const std::map<std::string, AffineFit>& fits = {});

ComponentScores evaluate_prepared(const PreparedSample& prepared, const std::string& model,
                                  const RunConfig& cfg, const WeightTable& weights);

// One-shot: weight table from cfg, preparation, evaluation.
ComponentScores evaluate_sample(const SceneSample& sample, const std::string& model,
                                const RunConfig& cfg);

}  // namespace depeval
