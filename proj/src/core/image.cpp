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

#include "depeval/core/image.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace depeval {

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

void DepthMap::check() const {
  if (values.rows() != valid.rows() || values.cols() != valid.cols()) {
    raise(Errc::kDimensionMismatch, "depth values and validity mask differ in shape");
  }
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    for (Eigen::Index j = 0; j < values.cols(); ++j) {
      if (!valid(i, j)) continue;
      const double v = values(i, j);
      if (!std::isfinite(v) || v < 0.0) {
        raise(Errc::kBadFormat, "valid depth pixel is not a finite non-negative value");
      }
    }
  }
}

DepthMap make_depth(GridD values, GridB valid) {
  DepthMap map{std::move(values), std::move(valid)};
  map.check();
  return map;
}

DepthMap make_dense_depth(GridD values) {
  GridB valid = GridB::Constant(values.rows(), values.cols(), true);
  return make_depth(std::move(values), std::move(valid));
}

void SegmentationMask::check() const {
  for (Eigen::Index i = 0; i < labels.rows(); ++i) {
    for (Eigen::Index j = 0; j < labels.cols(); ++j) {
      const std::uint16_t id = labels(i, j);
      if (id == kUnlabeled) continue;
      if (id_to_name.find(id) == id_to_name.end()) {
        raise(Errc::kUnknownLabel,
              "label id " + std::to_string(id) + " has no entry in the name table");
      }
    }
  }
}

std::set<std::uint16_t> SegmentationMask::ids_named(const std::set<std::string>& names) const {
  std::set<std::string> lower;
  for (const auto& n : names) lower.insert(lowercase(n));
  std::set<std::uint16_t> out;
  for (const auto& [id, name] : id_to_name) {
    if (lower.count(lowercase(name))) out.insert(id);
  }
  return out;
}

SegmentationMask all_unlabeled_mask(int height, int width) {
  SegmentationMask seg;
  seg.labels = GridU16::Constant(height, width, SegmentationMask::kUnlabeled);
  return seg;
}

void RgbImage::check() const {
  if (g.rows() != r.rows() || g.cols() != r.cols() || b.rows() != r.rows() ||
      b.cols() != r.cols()) {
    raise(Errc::kDimensionMismatch, "rgb channels differ in shape");
  }
}

GridD RgbImage::grayscale() const {
  return 0.299 * r.cast<double>() + 0.587 * g.cast<double>() + 0.114 * b.cast<double>();
}

const char* feature_kind_name(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::kEdge: return "edge";
    case FeatureKind::kCorner: return "corner";
    case FeatureKind::kUnion: return "union";
  }
  return "unknown";
}

FeatureKind parse_feature_kind(const std::string& name) {
  const std::string n = lowercase(name);
  if (n == "edge") return FeatureKind::kEdge;
  if (n == "corner") return FeatureKind::kCorner;
  if (n == "union") return FeatureKind::kUnion;
  raise(Errc::kBadConfig, "unknown feature kind '" + name + "'");
}

FeatureMap all_true_features(int height, int width, FeatureKind kind) {
  return FeatureMap{GridB::Constant(height, width, true), kind};
}

void validate_pair(const DepthMap& pred, const DepthMap& gt, const SegmentationMask* seg) {
  pred.check();
  gt.check();
  if (pred.width() != gt.width() || pred.height() != gt.height()) {
    raise(Errc::kDimensionMismatch,
          "prediction is " + std::to_string(pred.width()) + "x" + std::to_string(pred.height()) +
              ", ground truth is " + std::to_string(gt.width()) + "x" +
              std::to_string(gt.height()));
  }
  if (seg != nullptr && (seg->width() != gt.width() || seg->height() != gt.height())) {
    raise(Errc::kDimensionMismatch, "segmentation mask does not match the depth dimensions");
  }
  if (gt.valid_count() == 0) {
    raise(Errc::kEmptyGroundTruth, "ground truth has no valid pixel");
  }
}

GridB comparison_domain(const DepthMap& pred, const DepthMap& gt) {
  return pred.valid && gt.valid;
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kEmptyGroundTruth: return "EmptyGroundTruth";
    case Errc::kEmptyDomain: return "EmptyDomain";
    case Errc::kNoLabeledPixels: return "NoLabeledPixels";
    case Errc::kUnmappedClass: return "UnmappedClass";
    case Errc::kIoError: return "IoError";
    case Errc::kBadFormat: return "BadFormat";
    case Errc::kUnknownLabel: return "UnknownLabel";
    case Errc::kTooSparse: return "TooSparse";
    case Errc::kDegenerateFit: return "DegenerateFit";
    case Errc::kDegenerateImage: return "DegenerateImage";
    case Errc::kEmptyCatalog: return "EmptyCatalog";
    case Errc::kZeroTotal: return "ZeroTotal";
    case Errc::kUnknownModel: return "UnknownModel";
    case Errc::kEmptyDataset: return "EmptyDataset";
    case Errc::kBadConfig: return "BadConfig";
  }
  return "Error";
}

}  // namespace depeval
