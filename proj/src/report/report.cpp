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

#include "depeval/report/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "depeval/io/depth_io.hpp"

namespace depeval {

namespace {

// ---- aggregation ----------------------------------------------------------

ComponentScores aggregate_scores(const std::vector<SceneScore>& scenes,
                                 const RunConfig& cfg) {
  ComponentScores agg;
  agg.labeled = false;
  if (scenes.empty()) return agg;

  for (const SceneScore& s : scenes) {
    agg.acc.merge(s.scores.acc);
    agg.domain_pixels += s.scores.domain_pixels;
    agg.clamped_pixels += s.scores.clamped_pixels;
    agg.labeled = agg.labeled || s.scores.labeled;
  }

  if (cfg.aggregation == Aggregation::kPerImageMean) {
    const double n = static_cast<double>(scenes.size());
    for (const SceneScore& s : scenes) {
      agg.e_class += s.scores.e_class;
      agg.e_feature += s.scores.e_feature;
      agg.e_global += s.scores.e_global;
    }
    agg.e_class /= n;
    agg.e_feature /= n;
    agg.e_global /= n;

    // Mean of the finished per-image values, over the images where the
    // metric had any pixels.
    std::map<std::string, double> sums;
    std::map<std::string, std::int64_t> counts;
    for (const SceneScore& s : scenes) {
      for (const auto& [name, value] : s.scores.classical) {
        sums[name] += value;
        counts[name] += 1;
      }
    }
    for (const auto& [name, sum] : sums) {
      agg.classical[name] = sum / static_cast<double>(counts[name]);
    }
  } else {
    // Every pixel counts once: components weighted by domain size, classical
    // metrics finalized from the pooled statistics.
    double total = 0.0;
    for (const SceneScore& s : scenes) {
      const double w = static_cast<double>(s.scores.domain_pixels);
      agg.e_class += w * s.scores.e_class;
      agg.e_feature += w * s.scores.e_feature;
      agg.e_global += w * s.scores.e_global;
      total += w;
    }
    if (total > 0.0) {
      agg.e_class /= total;
      agg.e_feature /= total;
      agg.e_global /= total;
      agg.classical = classical_finalize(agg.acc);
    }
  }

  agg.combined = cfg.gamma * (agg.e_class + agg.e_feature + agg.e_global);
  agg.check(cfg.gamma);
  return agg;
}

std::vector<ClassAggregate> aggregate_classes(
    const std::vector<SceneScore>& scenes,
    const std::vector<ClassContribution> ComponentScores::* table, const RunConfig& cfg) {
  struct Acc {
    std::string super_class;
    double w_class_sum = 0.0;
    double w_dist_sum = 0.0;
    double mae_sum = 0.0;           // per-image-mean numerator
    double mae_pixel_sum = 0.0;     // pixel-pooled numerator
    double werr_sum = 0.0;
    double werr_pixel_sum = 0.0;
    std::int64_t pixels = 0;
    std::int64_t images = 0;
  };
  std::map<std::string, Acc> by_class;
  for (const SceneScore& s : scenes) {
    for (const ClassContribution& c : s.scores.*table) {
      Acc& a = by_class[c.class_name];
      if (a.super_class.empty()) a.super_class = c.super_class;
      if (c.pixel_count == 0) continue;  // listed but not scored in this scene
      a.w_class_sum += c.w_class;
      a.w_dist_sum += c.w_dist;
      a.mae_sum += c.class_mae;
      a.mae_pixel_sum += c.class_mae * static_cast<double>(c.pixel_count);
      a.werr_sum += c.weighted_error;
      a.werr_pixel_sum += c.weighted_error * static_cast<double>(c.pixel_count);
      a.pixels += c.pixel_count;
      a.images += 1;
    }
  }

  const bool pooled = cfg.aggregation == Aggregation::kPixelPooled;
  std::vector<ClassAggregate> out;
  out.reserve(by_class.size());
  for (const auto& [name, a] : by_class) {
    ClassAggregate row;
    row.class_name = name;
    row.super_class = a.super_class;
    row.pixels = a.pixels;
    row.images = a.images;
    if (a.images > 0) {
      const double images = static_cast<double>(a.images);
      const double pixels = static_cast<double>(a.pixels);
      row.w_class = a.w_class_sum / images;
      row.mean_w_dist = a.w_dist_sum / images;
      row.class_mae = pooled ? a.mae_pixel_sum / pixels : a.mae_sum / images;
      row.weighted_error = pooled ? a.werr_pixel_sum / pixels : a.werr_sum / images;
    }
    out.push_back(std::move(row));
  }
  return out;
}

// ---- dataset walk ---------------------------------------------------------

struct SampleOutcome {
  bool prepared = false;
  std::string error;  // load/prepare failure, blocks every model
  std::map<std::string, ComponentScores> scores;
  std::map<std::string, std::string> model_errors;
};

std::vector<std::string> intersect_ordered(const std::vector<std::string>& order,
                                           const std::vector<std::string>& pool) {
  std::vector<std::string> out;
  for (const std::string& name : order) {
    if (std::find(pool.begin(), pool.end(), name) != pool.end()) out.push_back(name);
  }
  return out;
}

}  // namespace

EvaluationReport evaluate_dataset(const RunConfig& cfg) {
  cfg.check();
  const WeightTable weights = config_weights(cfg);
  const std::vector<SampleRef> refs = scan_dataset(cfg.root);

  std::vector<std::string> models = cfg.models;
  if (models.empty()) models = list_models(refs.front().dir);
  if (models.empty()) {
    raise(Errc::kBadConfig, "no models requested and none found under '" +
                                refs.front().dir.string() + "/pred'");
  }

  std::map<std::uint16_t, std::string> default_names;
  const std::filesystem::path root_names = cfg.root / "labels.names";
  if (std::filesystem::exists(root_names)) default_names = read_name_table(root_names);

  // Scale/shift alignment, pooled over the configured calibration frames.
  std::map<std::string, AffineFit> fits;
  std::map<std::string, std::string> fit_errors;
  std::vector<std::string> fit_ids;
  const std::vector<std::string> affine_models = intersect_ordered(models, cfg.affine_models);
  if (!affine_models.empty()) {
    std::vector<const SampleRef*> fit_refs;
    if (cfg.affine_fit_frames.empty()) {
      fit_refs.push_back(&refs.front());
    } else {
      for (const std::string& id : cfg.affine_fit_frames) {
        const auto it = std::find_if(refs.begin(), refs.end(),
                                     [&](const SampleRef& r) { return r.id() == id; });
        if (it == refs.end()) {
          raise(Errc::kBadConfig, "affine fit frame '" + id + "' is not in the dataset");
        }
        fit_refs.push_back(&*it);
      }
    }
    for (const SampleRef* ref : fit_refs) fit_ids.push_back(ref->id());

    for (const std::string& model : affine_models) {
      try {
        std::vector<SceneSample> samples;
        samples.reserve(fit_refs.size());
        std::vector<const DepthMap*> preds, gts;
        for (const SampleRef* ref : fit_refs) {
          samples.push_back(
              load_sample(*ref, {model}, cfg.png_scale_divisor, default_names));
          preds.push_back(&samples.back().pred.at(model));
          gts.push_back(&samples.back().gt);
        }
        fits[model] = fit_scale_shift_pooled(preds, gts);
      } catch (const std::exception& e) {
        fit_errors[model] = e.what();
      }
    }
  }

  std::vector<std::string> eval_models;
  for (const std::string& model : models) {
    if (!fit_errors.count(model)) eval_models.push_back(model);
  }

  // Score samples concurrently; each index is owned by exactly one worker
  // and the reduction below walks indices in order, so results do not depend
  // on scheduling.
  std::vector<SampleOutcome> outcomes(refs.size());
  const auto run_one = [&](std::size_t i) {
    SampleOutcome& out = outcomes[i];
    PreparedSample prepared;
    try {
      const SceneSample sample =
          load_sample(refs[i], eval_models, cfg.png_scale_divisor, default_names);
      prepared = prepare_sample(sample, cfg, weights, fits);
      out.prepared = true;
    } catch (const std::exception& e) {
      out.error = e.what();
      return;
    }
    for (const std::string& model : eval_models) {
      try {
        out.scores[model] = evaluate_prepared(prepared, model, cfg, weights);
      } catch (const std::exception& e) {
        out.model_errors[model] = e.what();
      }
    }
  };

  int jobs = cfg.jobs > 0 ? cfg.jobs : static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(refs.size())));
  if (jobs == 1 || eval_models.empty()) {
    for (std::size_t i = 0; i < refs.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    const auto worker = [&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= refs.size()) return;
        run_one(i);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  EvaluationReport report;
  report.config = run_config_to_json(cfg);
  report.divergence_rule =
      "divergence = combined - gamma * 3 * mae; descending, ties by scene id";
  report.samples_total = static_cast<std::int64_t>(refs.size());
  for (std::size_t i = 0; i < refs.size(); ++i) {
    if (!outcomes[i].prepared) {
      report.load_failures.push_back(refs[i].id() + ": " + outcomes[i].error);
    }
  }

  for (const std::string& model : models) {
    ModelReport mr;
    mr.model = model;
    const auto fit_it = fits.find(model);
    if (fit_it != fits.end()) {
      mr.affine = fit_it->second;
      mr.affine_applied = true;
      mr.fit_frames = fit_ids;
    }
    const auto err_it = fit_errors.find(model);
    if (err_it != fit_errors.end()) {
      mr.failures.push_back("(affine fit) " + err_it->second);
      report.models.push_back(std::move(mr));
      continue;
    }
    for (std::size_t i = 0; i < refs.size(); ++i) {
      const SampleOutcome& out = outcomes[i];
      if (!out.prepared) continue;
      const auto score_it = out.scores.find(model);
      if (score_it != out.scores.end()) {
        mr.scenes.push_back({refs[i].id(), score_it->second});
      } else {
        mr.failures.push_back(refs[i].id() + ": " + out.model_errors.at(model));
      }
    }
    mr.aggregate = aggregate_scores(mr.scenes, cfg);
    mr.per_class = aggregate_classes(mr.scenes, &ComponentScores::per_class, cfg);
    mr.per_class_feature =
        aggregate_classes(mr.scenes, &ComponentScores::per_class_feature, cfg);
    report.models.push_back(std::move(mr));
  }
  return report;
}

// ---- ranking --------------------------------------------------------------

std::vector<RankedScene> rank_scenes(const EvaluationReport& report,
                                     const std::string& model) {
  const auto it = std::find_if(report.models.begin(), report.models.end(),
                               [&](const ModelReport& m) { return m.model == model; });
  if (it == report.models.end()) {
    raise(Errc::kUnknownModel, "report has no model '" + model + "'");
  }
  const double gamma = report.config.value("gamma", 1.0);

  std::vector<RankedScene> ranked;
  ranked.reserve(it->scenes.size());
  for (const SceneScore& s : it->scenes) {
    RankedScene r;
    r.id = s.id;
    r.combined = s.scores.combined;
    r.mae = s.scores.classical.at("mae");
    r.divergence = r.combined - gamma * 3.0 * r.mae;
    ranked.push_back(std::move(r));
  }
  std::sort(ranked.begin(), ranked.end(), [](const RankedScene& a, const RankedScene& b) {
    if (a.divergence != b.divergence) return a.divergence > b.divergence;
    return a.id < b.id;
  });
  return ranked;
}

// ---- serialization --------------------------------------------------------

namespace {

nlohmann::json acc_to_json(const MetricAcc& a) {
  return nlohmann::json{{"s1", a.s1}, {"s2", a.s2}, {"n", a.n}};
}

MetricAcc acc_from_json(const nlohmann::json& j) {
  MetricAcc a;
  a.s1 = j.at("s1").get<double>();
  a.s2 = j.at("s2").get<double>();
  a.n = j.at("n").get<std::int64_t>();
  return a;
}

nlohmann::json classical_acc_to_json(const ClassicalAcc& acc) {
  return nlohmann::json{
      {"mae", acc_to_json(acc.mae)},
      {"rmse", acc_to_json(acc.rmse)},
      {"abs_rel", acc_to_json(acc.abs_rel)},
      {"rel_sq", acc_to_json(acc.rel_sq)},
      {"log_rmse", acc_to_json(acc.log_rmse)},
      {"log10", acc_to_json(acc.log10)},
      {"silog", acc_to_json(acc.silog)},
      {"delta_1", acc_to_json(acc.delta1)},
      {"delta_2", acc_to_json(acc.delta2)},
      {"delta_3", acc_to_json(acc.delta3)},
      {"ratio_excluded", acc.ratio_excluded},
      {"log_excluded", acc.log_excluded},
  };
}

ClassicalAcc classical_acc_from_json(const nlohmann::json& j) {
  ClassicalAcc acc;
  acc.mae = acc_from_json(j.at("mae"));
  acc.rmse = acc_from_json(j.at("rmse"));
  acc.abs_rel = acc_from_json(j.at("abs_rel"));
  acc.rel_sq = acc_from_json(j.at("rel_sq"));
  acc.log_rmse = acc_from_json(j.at("log_rmse"));
  acc.log10 = acc_from_json(j.at("log10"));
  acc.silog = acc_from_json(j.at("silog"));
  acc.delta1 = acc_from_json(j.at("delta_1"));
  acc.delta2 = acc_from_json(j.at("delta_2"));
  acc.delta3 = acc_from_json(j.at("delta_3"));
  acc.ratio_excluded = j.at("ratio_excluded").get<std::int64_t>();
  acc.log_excluded = j.at("log_excluded").get<std::int64_t>();
  return acc;
}

nlohmann::json contribution_to_json(const ClassContribution& c) {
  return nlohmann::json{
      {"class", c.class_name},
      {"super", c.super_class},
      {"w_class", c.w_class},
      {"w_dist", c.w_dist},
      {"class_mae", c.class_mae},
      {"weighted_error", c.weighted_error},
      {"pixels", c.pixel_count},
      {"no_gt", c.no_gt},
      {"no_features", c.no_features},
      {"unmapped", c.unmapped},
  };
}

ClassContribution contribution_from_json(const nlohmann::json& j) {
  ClassContribution c;
  c.class_name = j.at("class").get<std::string>();
  c.super_class = j.at("super").get<std::string>();
  c.w_class = j.at("w_class").get<double>();
  c.w_dist = j.at("w_dist").get<double>();
  c.class_mae = j.at("class_mae").get<double>();
  c.weighted_error = j.at("weighted_error").get<double>();
  c.pixel_count = j.at("pixels").get<std::int64_t>();
  c.no_gt = j.at("no_gt").get<bool>();
  c.no_features = j.at("no_features").get<bool>();
  c.unmapped = j.at("unmapped").get<bool>();
  return c;
}

nlohmann::json scores_to_json(const ComponentScores& s) {
  nlohmann::json per_class = nlohmann::json::array();
  for (const auto& c : s.per_class) per_class.push_back(contribution_to_json(c));
  nlohmann::json per_feature = nlohmann::json::array();
  for (const auto& c : s.per_class_feature) per_feature.push_back(contribution_to_json(c));
  return nlohmann::json{
      {"e_class", s.e_class},
      {"e_feature", s.e_feature},
      {"e_global", s.e_global},
      {"combined", s.combined},
      {"classical", s.classical},
      {"acc", classical_acc_to_json(s.acc)},
      {"per_class", std::move(per_class)},
      {"per_class_feature", std::move(per_feature)},
      {"domain_pixels", s.domain_pixels},
      {"clamped_pixels", s.clamped_pixels},
      {"labeled", s.labeled},
  };
}

ComponentScores scores_from_json(const nlohmann::json& j) {
  ComponentScores s;
  s.e_class = j.at("e_class").get<double>();
  s.e_feature = j.at("e_feature").get<double>();
  s.e_global = j.at("e_global").get<double>();
  s.combined = j.at("combined").get<double>();
  s.classical = j.at("classical").get<std::map<std::string, double>>();
  s.acc = classical_acc_from_json(j.at("acc"));
  for (const auto& c : j.at("per_class")) s.per_class.push_back(contribution_from_json(c));
  for (const auto& c : j.at("per_class_feature")) {
    s.per_class_feature.push_back(contribution_from_json(c));
  }
  s.domain_pixels = j.at("domain_pixels").get<std::int64_t>();
  s.clamped_pixels = j.at("clamped_pixels").get<std::int64_t>();
  s.labeled = j.at("labeled").get<bool>();
  return s;
}

nlohmann::json class_aggregate_to_json(const ClassAggregate& a) {
  return nlohmann::json{
      {"class", a.class_name},
      {"super", a.super_class},
      {"w_class", a.w_class},
      {"mean_w_dist", a.mean_w_dist},
      {"class_mae", a.class_mae},
      {"weighted_error", a.weighted_error},
      {"pixels", a.pixels},
      {"images", a.images},
  };
}

ClassAggregate class_aggregate_from_json(const nlohmann::json& j) {
  ClassAggregate a;
  a.class_name = j.at("class").get<std::string>();
  a.super_class = j.at("super").get<std::string>();
  a.w_class = j.at("w_class").get<double>();
  a.mean_w_dist = j.at("mean_w_dist").get<double>();
  a.class_mae = j.at("class_mae").get<double>();
  a.weighted_error = j.at("weighted_error").get<double>();
  a.pixels = j.at("pixels").get<std::int64_t>();
  a.images = j.at("images").get<std::int64_t>();
  return a;
}

nlohmann::json affine_to_json(const AffineFit& f) {
  return nlohmann::json{{"scale", f.scale},
                        {"shift", f.shift},
                        {"residual_rmse", f.residual_rmse},
                        {"sample_count", f.sample_count}};
}

AffineFit affine_from_json(const nlohmann::json& j) {
  AffineFit f;
  f.scale = j.at("scale").get<double>();
  f.shift = j.at("shift").get<double>();
  f.residual_rmse = j.at("residual_rmse").get<double>();
  f.sample_count = j.at("sample_count").get<std::int64_t>();
  return f;
}

}  // namespace

nlohmann::json report_to_json(const EvaluationReport& report) {
  nlohmann::json models = nlohmann::json::array();
  for (const ModelReport& m : report.models) {
    nlohmann::json scenes = nlohmann::json::array();
    for (const SceneScore& s : m.scenes) {
      scenes.push_back({{"id", s.id}, {"scores", scores_to_json(s.scores)}});
    }
    nlohmann::json per_class = nlohmann::json::array();
    for (const auto& a : m.per_class) per_class.push_back(class_aggregate_to_json(a));
    nlohmann::json per_feature = nlohmann::json::array();
    for (const auto& a : m.per_class_feature) {
      per_feature.push_back(class_aggregate_to_json(a));
    }
    models.push_back({
        {"model", m.model},
        {"aggregate", scores_to_json(m.aggregate)},
        {"per_class", std::move(per_class)},
        {"per_class_feature", std::move(per_feature)},
        {"scenes", std::move(scenes)},
        {"affine", affine_to_json(m.affine)},
        {"affine_applied", m.affine_applied},
        {"fit_frames", m.fit_frames},
        {"failures", m.failures},
    });
  }
  return nlohmann::json{
      {"schema", report.schema},
      {"config", report.config},
      {"divergence_rule", report.divergence_rule},
      {"samples_total", report.samples_total},
      {"load_failures", report.load_failures},
      {"models", std::move(models)},
  };
}

EvaluationReport report_from_json(const nlohmann::json& j) {
  EvaluationReport report;
  try {
    report.schema = j.at("schema").get<std::string>();
    if (report.schema != "depeval-report/1") {
      raise(Errc::kBadFormat, "unsupported report schema '" + report.schema + "'");
    }
    report.config = j.at("config");
    report.divergence_rule = j.at("divergence_rule").get<std::string>();
    report.samples_total = j.at("samples_total").get<std::int64_t>();
    report.load_failures = j.at("load_failures").get<std::vector<std::string>>();
    for (const auto& jm : j.at("models")) {
      ModelReport m;
      m.model = jm.at("model").get<std::string>();
      m.aggregate = scores_from_json(jm.at("aggregate"));
      for (const auto& a : jm.at("per_class")) {
        m.per_class.push_back(class_aggregate_from_json(a));
      }
      for (const auto& a : jm.at("per_class_feature")) {
        m.per_class_feature.push_back(class_aggregate_from_json(a));
      }
      for (const auto& js : jm.at("scenes")) {
        m.scenes.push_back(
            {js.at("id").get<std::string>(), scores_from_json(js.at("scores"))});
      }
      m.affine = affine_from_json(jm.at("affine"));
      m.affine_applied = jm.at("affine_applied").get<bool>();
      m.fit_frames = jm.at("fit_frames").get<std::vector<std::string>>();
      m.failures = jm.at("failures").get<std::vector<std::string>>();
      report.models.push_back(std::move(m));
    }
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::kBadFormat, std::string("report: ") + e.what());
  }
  return report;
}

EvaluationReport load_report(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) raise(Errc::kIoError, "cannot open report '" + path.string() + "'");
  nlohmann::json j;
  try {
    file >> j;
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::kBadFormat, path.string() + ": " + e.what());
  }
  return report_from_json(j);
}

// ---- files and tables -----------------------------------------------------

namespace {

std::string fmt(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

const std::vector<std::string>& csv_metric_columns() {
  static const std::vector<std::string> kColumns = {
      "mae",   "rmse",  "abs_rel", "rel_sq",  "log_rmse",
      "log10", "silog", "delta_1", "delta_2", "delta_3",
  };
  return kColumns;
}

void write_scene_csv(const ModelReport& m, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) raise(Errc::kIoError, "cannot write '" + path.string() + "'");
  out << "id,e_class,e_feature,e_global,combined";
  for (const std::string& name : csv_metric_columns()) out << ',' << name;
  out << ",domain_pixels,clamped_pixels,labeled\n";
  for (const SceneScore& s : m.scenes) {
    out << s.id << ',' << fmt(s.scores.e_class) << ',' << fmt(s.scores.e_feature) << ','
        << fmt(s.scores.e_global) << ',' << fmt(s.scores.combined);
    for (const std::string& name : csv_metric_columns()) {
      out << ',';
      const auto it = s.scores.classical.find(name);
      if (it != s.scores.classical.end()) out << fmt(it->second);
    }
    out << ',' << s.scores.domain_pixels << ',' << s.scores.clamped_pixels << ','
        << (s.scores.labeled ? 1 : 0) << '\n';
  }
}

std::string safe_filename(const std::string& name) {
  std::string out = name;
  for (char& c : out) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_' && c != '.') {
      c = '_';
    }
  }
  return out;
}

}  // namespace

void write_report_files(const EvaluationReport& report,
                        const std::filesystem::path& out_dir, bool csv) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) raise(Errc::kIoError, "cannot create '" + out_dir.string() + "': " + ec.message());

  const std::filesystem::path json_path = out_dir / "report.json";
  std::ofstream out(json_path);
  if (!out) raise(Errc::kIoError, "cannot write '" + json_path.string() + "'");
  out << report_to_json(report).dump(2) << '\n';
  if (!out) raise(Errc::kIoError, "write failed for '" + json_path.string() + "'");

  if (csv) {
    for (const ModelReport& m : report.models) {
      write_scene_csv(m, out_dir / ("scenes_" + safe_filename(m.model) + ".csv"));
    }
  }
}

std::string report_table(const EvaluationReport& report) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  out << "samples: " << report.samples_total;
  if (!report.load_failures.empty()) {
    out << "  (" << report.load_failures.size() << " failed to load)";
  }
  out << "\nranking rule: " << report.divergence_rule << "\n\n";

  out << std::left << std::setw(24) << "model" << std::right << std::setw(10) << "e_class"
      << std::setw(10) << "e_feat" << std::setw(10) << "e_global" << std::setw(10)
      << "combined" << std::setw(10) << "mae" << std::setw(10) << "rmse" << std::setw(10)
      << "abs_rel" << std::setw(9) << "delta_1" << std::setw(8) << "scenes" << '\n';
  for (const ModelReport& m : report.models) {
    const auto metric = [&](const char* name) -> std::string {
      const auto it = m.aggregate.classical.find(name);
      if (it == m.aggregate.classical.end()) return "-";
      std::ostringstream v;
      v << std::fixed << std::setprecision(4) << it->second;
      return v.str();
    };
    out << std::left << std::setw(24) << m.model << std::right << std::setw(10)
        << m.aggregate.e_class << std::setw(10) << m.aggregate.e_feature << std::setw(10)
        << m.aggregate.e_global << std::setw(10) << m.aggregate.combined << std::setw(10)
        << metric("mae") << std::setw(10) << metric("rmse") << std::setw(10)
        << metric("abs_rel") << std::setw(9) << metric("delta_1") << std::setw(8)
        << m.scenes.size() << '\n';
    if (m.affine_applied) {
      out << "  aligned: scale " << m.affine.scale << ", shift " << m.affine.shift
          << " (fit on";
      for (const std::string& id : m.fit_frames) out << ' ' << id;
      out << ")\n";
    }
    for (const std::string& failure : m.failures) out << "  failed: " << failure << '\n';
  }

  for (const ModelReport& m : report.models) {
    if (m.per_class.empty()) continue;
    out << '\n' << m.model << " per class:\n";
    out << "  " << std::left << std::setw(22) << "class" << std::setw(24) << "super"
        << std::right << std::setw(9) << "w_class" << std::setw(9) << "w_dist"
        << std::setw(11) << "mae" << std::setw(11) << "contrib" << std::setw(12) << "pixels"
        << std::setw(8) << "images" << '\n';
    for (const ClassAggregate& a : m.per_class) {
      out << "  " << std::left << std::setw(22) << a.class_name << std::setw(24)
          << (a.super_class.empty() ? "(unmapped)" : a.super_class) << std::right
          << std::setw(9) << a.w_class << std::setw(9) << a.mean_w_dist << std::setw(11)
          << a.class_mae << std::setw(11) << a.weighted_error << std::setw(12) << a.pixels
          << std::setw(8) << a.images << '\n';
    }
  }
  return out.str();
}

}  // namespace depeval
