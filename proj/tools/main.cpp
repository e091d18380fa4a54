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

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "depeval/align/affine.hpp"
#include "depeval/analysis/catalog.hpp"
#include "depeval/densify/densify.hpp"
#include "depeval/io/depth_io.hpp"
#include "depeval/report/report.hpp"

using namespace depeval;

namespace {

DepthMap read_depth_any(const std::filesystem::path& path, double divisor) {
  const std::string ext = path.extension().string();
  if (ext == ".f32") return read_depth_f32(path);
  if (ext == ".png") return read_depth_png16(path, divisor);
  raise(Errc::kBadFormat, "unsupported depth extension '" + ext + "' (want .f32 or .png)");
}

void write_depth_any(const std::filesystem::path& path, const DepthMap& depth,
                     double divisor) {
  const std::string ext = path.extension().string();
  if (ext == ".f32") return write_depth_f32(path, depth);
  if (ext == ".png") return write_depth_png16(path, depth, divisor);
  raise(Errc::kBadFormat, "unsupported depth extension '" + ext + "' (want .f32 or .png)");
}

// exit codes: 0 success, 1 partial failures, 2 fatal
int run_eval(const RunConfig& cfg) {
  const EvaluationReport report = evaluate_dataset(cfg);
  std::cout << report_table(report);
  if (!cfg.out_dir.empty()) {
    write_report_files(report, cfg.out_dir, cfg.write_csv);
    std::cout << "\nreport written to " << (cfg.out_dir / "report.json").string() << '\n';
  }
  bool partial = !report.load_failures.empty();
  for (const ModelReport& m : report.models) partial = partial || !m.failures.empty();
  return partial ? 1 : 0;
}

int run_rank(const std::filesystem::path& report_path, std::string model, int top) {
  const EvaluationReport report = load_report(report_path);
  if (model.empty()) {
    if (report.models.size() != 1) {
      raise(Errc::kBadConfig, "--model is required when the report has several models");
    }
    model = report.models.front().model;
  }
  std::vector<RankedScene> ranked = rank_scenes(report, model);
  if (top > 0 && top < static_cast<int>(ranked.size())) ranked.resize(top);

  std::cout << "model: " << model << '\n' << "rule:  " << report.divergence_rule << '\n';
  int place = 0;
  for (const RankedScene& r : ranked) {
    std::printf("%4d  %-40s divergence %10.6f  combined %10.6f  mae %10.6f\n", ++place,
                r.id.c_str(), r.divergence, r.combined, r.mae);
  }
  return 0;
}

int run_analyze(const std::filesystem::path& catalog_path, bool as_json) {
  const auto catalog = load_catalog(catalog_path);
  const auto frames = frames_per_class(catalog);
  const auto shares = class_share(frames);

  if (as_json) {
    std::cout << nlohmann::json{{"frames", frames}, {"shares", shares}}.dump(2) << '\n';
    return 0;
  }
  std::int64_t total = 0;
  for (const auto& entry : catalog) total += entry.frame_count;
  std::cout << catalog.size() << " datasets, " << total << " frames\n";

  std::vector<std::pair<std::string, double>> rows(shares.begin(), shares.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  for (const auto& [cls, share] : rows) {
    std::printf("%-12s %10.0f frames  %6.2f %%\n", cls.c_str(), frames.at(cls),
                100.0 * share);
  }
  return 0;
}

int run_fit_affine(const std::filesystem::path& pred_path,
                   const std::filesystem::path& gt_path, double divisor,
                   const std::filesystem::path& apply_path, bool as_json) {
  const DepthMap pred = read_depth_any(pred_path, divisor);
  const DepthMap gt = read_depth_any(gt_path, divisor);
  const AffineFit fit = fit_scale_shift(pred, gt);
  if (as_json) {
    std::cout << nlohmann::json{{"scale", fit.scale},
                                {"shift", fit.shift},
                                {"residual_rmse", fit.residual_rmse},
                                {"sample_count", fit.sample_count}}
                     .dump(2)
              << '\n';
  } else {
    std::printf("scale %.9g  shift %.9g  residual_rmse %.9g  pixels %lld\n", fit.scale,
                fit.shift, fit.residual_rmse, static_cast<long long>(fit.sample_count));
  }
  if (!apply_path.empty()) {
    const AffineApplied applied = apply_affine(pred, fit);
    write_depth_any(apply_path, applied.depth, divisor);
    if (applied.clamped > 0) {
      std::cerr << "note: " << applied.clamped << " aligned values clamped to 0\n";
    }
  }
  return 0;
}

int run_densify(const std::filesystem::path& in_path, const std::filesystem::path& out_path,
                const std::string& method, double divisor) {
  const DepthMap sparse = read_depth_any(in_path, divisor);
  const DepthMap dense = densify(sparse, parse_densify_method(method));
  write_depth_any(out_path, dense, divisor);
  std::cout << "densified " << sparse.valid_count() << " -> " << dense.valid_count()
            << " valid pixels\n";
  return 0;
}

int run_dump_weights(const std::filesystem::path& weights_path) {
  const WeightTable table =
      weights_path.empty() ? builtin_gidas_table() : load_weight_table(weights_path);
  table.validate();
  std::cout << format_weight_table(table);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"class-aware evaluation of metric depth predictions"};
  app.require_subcommand(1);

  // eval ---------------------------------------------------------------
  auto* eval = app.add_subcommand("eval", "score every (sample, model) pair of a dataset");
  std::string cfg_path, root, weights, agg, densify_method, feature_kind, out_dir;
  std::vector<std::string> models, focus, affine_models, fit_frames;
  double gamma = 1.0, png_divisor = 256.0;
  bool no_densify = false, csv = false, renorm = false;
  int jobs = 0;
  FeatureParams fp;
  eval->add_option("--config", cfg_path, "JSON run config; flags override its fields");
  eval->add_option("--root", root, "dataset root directory");
  eval->add_option("--models", models, "model names (default: discovered)")->delimiter(',');
  eval->add_option("--weights", weights, "weight table file (default: builtin)");
  eval->add_option("--gamma", gamma, "combined-score factor");
  eval->add_option("--focus", focus, "evaluate only these super-classes")->delimiter(',');
  eval->add_flag("--renormalize-present", renorm,
                 "renormalize class weights over the classes present per image");
  eval->add_option("--agg", agg, "per-image-mean or pixel-pooled");
  eval->add_option("--densify", densify_method, "nearest or linear");
  eval->add_flag("--no-densify", no_densify, "evaluate on the sparse ground truth");
  eval->add_option("--png-divisor", png_divisor, "meters = raw / divisor for PNG depth");
  eval->add_option("--feature-kind", feature_kind, "edge, corner, or union");
  eval->add_option("--edge-low", fp.edge_low, "hysteresis low threshold");
  eval->add_option("--edge-high", fp.edge_high, "hysteresis high threshold");
  eval->add_option("--edge-thickness", fp.edge_thickness, "contour dilation radius");
  eval->add_option("--corner-k", fp.corner_k, "Harris sensitivity");
  eval->add_option("--corner-threshold", fp.corner_rel_threshold,
                   "corner response floor, fraction of the maximum");
  eval->add_option("--corner-radius", fp.corner_radius, "corner stamp radius");
  eval->add_option("--window", fp.window, "structure tensor window");
  eval->add_option("--affine-models", affine_models, "models to scale/shift-align")
      ->delimiter(',');
  eval->add_option("--fit-frames", fit_frames, "scene/frame ids pooled for the fit")
      ->delimiter(',');
  eval->add_option("--out", out_dir, "directory for report.json (and CSVs)");
  eval->add_flag("--csv", csv, "also write per-scene CSVs");
  eval->add_option("--jobs", jobs, "worker threads (0 = hardware)");

  // rank ---------------------------------------------------------------
  auto* rank = app.add_subcommand("rank", "order scenes most critical first");
  std::string rank_report, rank_model;
  int rank_top = 0;
  rank->add_option("--report", rank_report, "report.json from eval")->required();
  rank->add_option("--model", rank_model, "model to rank (default: the only one)");
  rank->add_option("--top", rank_top, "show only the first N scenes");

  // analyze-datasets ----------------------------------------------------
  auto* analyze = app.add_subcommand("analyze-datasets",
                                     "training-data composition from a dataset catalog");
  std::string catalog_path;
  bool analyze_json = false;
  analyze->add_option("--catalog", catalog_path, "catalog file")->required();
  analyze->add_flag("--json", analyze_json, "JSON instead of a table");

  // fit-affine ----------------------------------------------------------
  auto* fit = app.add_subcommand("fit-affine",
                                 "least-squares scale/shift of a prediction onto metric "
                                 "ground truth");
  std::string fit_pred, fit_gt, fit_apply;
  double fit_divisor = 256.0;
  bool fit_json = false;
  fit->add_option("--pred", fit_pred, "prediction (.f32 or .png)")->required();
  fit->add_option("--gt", fit_gt, "ground truth (.f32 or .png)")->required();
  fit->add_option("--png-divisor", fit_divisor, "meters = raw / divisor for PNG depth");
  fit->add_option("--apply", fit_apply, "write the aligned prediction here");
  fit->add_flag("--json", fit_json, "JSON instead of one line");

  // densify -------------------------------------------------------------
  auto* dens = app.add_subcommand("densify", "fill the invalid pixels of a depth map");
  std::string dens_in, dens_out, dens_method = "linear";
  double dens_divisor = 256.0;
  dens->add_option("--input", dens_in, "sparse depth (.f32 or .png)")->required();
  dens->add_option("--output", dens_out, "dense depth (.f32 or .png)")->required();
  dens->add_option("--method", dens_method, "nearest or linear");
  dens->add_option("--png-divisor", dens_divisor, "meters = raw / divisor for PNG depth");

  // dump-weights ----------------------------------------------------------
  auto* dump = app.add_subcommand("dump-weights", "print a weight table");
  std::string dump_weights;
  dump->add_option("--weights", dump_weights, "file to validate and echo (default: builtin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) {
      RunConfig cfg;
      if (!cfg_path.empty()) cfg = load_run_config(cfg_path);
      if (eval->count("--root")) cfg.root = root;
      if (eval->count("--models")) cfg.models = models;
      if (eval->count("--weights")) cfg.weights_path = weights;
      if (eval->count("--gamma")) cfg.gamma = gamma;
      if (eval->count("--focus")) cfg.focus = focus;
      if (eval->count("--renormalize-present")) cfg.renormalize_present = renorm;
      if (eval->count("--agg")) cfg.aggregation = parse_aggregation(agg);
      if (eval->count("--densify")) cfg.densify = parse_densify_method(densify_method);
      if (eval->count("--no-densify")) cfg.densify_gt = !no_densify;
      if (eval->count("--png-divisor")) cfg.png_scale_divisor = png_divisor;
      if (eval->count("--feature-kind")) cfg.feature_kind = parse_feature_kind(feature_kind);
      if (eval->count("--edge-low")) cfg.features.edge_low = fp.edge_low;
      if (eval->count("--edge-high")) cfg.features.edge_high = fp.edge_high;
      if (eval->count("--edge-thickness")) cfg.features.edge_thickness = fp.edge_thickness;
      if (eval->count("--corner-k")) cfg.features.corner_k = fp.corner_k;
      if (eval->count("--corner-threshold")) {
        cfg.features.corner_rel_threshold = fp.corner_rel_threshold;
      }
      if (eval->count("--corner-radius")) cfg.features.corner_radius = fp.corner_radius;
      if (eval->count("--window")) cfg.features.window = fp.window;
      if (eval->count("--affine-models")) cfg.affine_models = affine_models;
      if (eval->count("--fit-frames")) cfg.affine_fit_frames = fit_frames;
      if (eval->count("--out")) cfg.out_dir = out_dir;
      if (eval->count("--csv")) cfg.write_csv = csv;
      if (eval->count("--jobs")) cfg.jobs = jobs;
      if (cfg.root.empty()) raise(Errc::kBadConfig, "--root (or a config file) is required");
      cfg.check();
      return run_eval(cfg);
    }
    if (rank->parsed()) return run_rank(rank_report, rank_model, rank_top);
    if (analyze->parsed()) return run_analyze(catalog_path, analyze_json);
    if (fit->parsed()) return run_fit_affine(fit_pred, fit_gt, fit_divisor, fit_apply, fit_json);
    if (dens->parsed()) return run_densify(dens_in, dens_out, dens_method, dens_divisor);
    if (dump->parsed()) return run_dump_weights(dump_weights);
  } catch (const std::exception& e) {
    // Error::what() already leads with the error class name
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
