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
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "depeval/report/evaluate.hpp"

namespace depeval {

struct SceneScore {
  std::string id;  // "scene/frame"
  ComponentScores scores;
};

// One class accumulated over all scenes of a model.
struct ClassAggregate {
  std::string class_name;
  std::string super_class;
  double w_class = 0.0;      // mean effective weight over scored scenes
  double mean_w_dist = 0.0;  // mean over scored scenes
  double class_mae = 0.0;    // aggregated per the run's aggregation mode
  double weighted_error = 0.0;
  std::int64_t pixels = 0;
  std::int64_t images = 0;  // scenes where the class was scored
};

struct ModelReport {
  std::string model;
  ComponentScores aggregate;  // per_class vectors stay empty here
  std::vector<ClassAggregate> per_class;
  std::vector<ClassAggregate> per_class_feature;
  std::vector<SceneScore> scenes;
  AffineFit affine;  // identity unless the model was aligned
  bool affine_applied = false;
  std::vector<std::string> fit_frames;  // sample ids the fit pooled
  std::vector<std::string> failures;    // "<sample>: <error>"
};

struct EvaluationReport {
  std::string schema = "depeval-report/1";
  nlohmann::json config;        // echo of the run configuration
  std::string divergence_rule;  // the rank_scenes rule, declared up front
  std::int64_t samples_total = 0;
  std::vector<std::string> load_failures;  // samples no model could score
  std::vector<ModelReport> models;
};

// Walks the dataset and scores every (sample, model) pair. Failures are
// isolated: a broken sample or prediction is recorded and the run goes on.
// Raises only when nothing is evaluable at all.
EvaluationReport evaluate_dataset(const RunConfig& cfg);

struct RankedScene {
  std::string id;
  double divergence = 0.0;  // combined - gamma * 3 * mae
  double combined = 0.0;
  double mae = 0.0;
};

// Scenes ordered most critical first: descending divergence of the combined
// score from what a class-blind scene would yield, ties broken by id.
std::vector<RankedScene> rank_scenes(const EvaluationReport& report,
                                     const std::string& model);

nlohmann::json report_to_json(const EvaluationReport& report);
EvaluationReport report_from_json(const nlohmann::json& j);
EvaluationReport load_report(const std::filesystem::path& path);

// report.json and per-model per-scene CSVs (when csv is set) under out_dir.
void write_report_files(const EvaluationReport& report,
                        const std::filesystem::path& out_dir, bool csv);

// Human-readable summary: one row per model plus per-class tables.
std::string report_table(const EvaluationReport& report);

}  // namespace depeval
