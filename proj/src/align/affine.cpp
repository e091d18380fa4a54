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

#include "depeval/align/affine.hpp"

#include <cmath>

namespace depeval {

namespace {

struct OlsAcc {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::int64_t n = 0;

  void add(const DepthMap& pred, const DepthMap& gt) {
    if (!same_shape(pred.values, gt.values)) {
      raise(Errc::kDimensionMismatch, "fit inputs differ in shape");
    }
    for (Eigen::Index i = 0; i < pred.values.rows(); ++i) {
      for (Eigen::Index j = 0; j < pred.values.cols(); ++j) {
        if (!pred.valid(i, j) || !gt.valid(i, j)) continue;
        const double x = pred.values(i, j);
        const double y = gt.values(i, j);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        n += 1;
      }
    }
  }

  AffineFit solve() const {
    if (n < 2) raise(Errc::kDegenerateFit, "fewer than 2 shared valid pixels");
    const double nn = static_cast<double>(n);
    const double var = sxx / nn - (sx / nn) * (sx / nn);
    if (var <= 0.0) raise(Errc::kDegenerateFit, "constant predictor");
    const double cov = sxy / nn - (sx / nn) * (sy / nn);
    AffineFit fit;
    fit.scale = cov / var;
    fit.shift = sy / nn - fit.scale * sx / nn;
    fit.sample_count = n;
    return fit;
  }
};

double residual_rmse(const AffineFit& fit, const std::vector<const DepthMap*>& preds,
                     const std::vector<const DepthMap*>& gts) {
  double sq = 0.0;
  std::int64_t n = 0;
  for (std::size_t s = 0; s < preds.size(); ++s) {
    const DepthMap& pred = *preds[s];
    const DepthMap& gt = *gts[s];
    for (Eigen::Index i = 0; i < pred.values.rows(); ++i) {
      for (Eigen::Index j = 0; j < pred.values.cols(); ++j) {
        if (!pred.valid(i, j) || !gt.valid(i, j)) continue;
        const double r = fit.scale * pred.values(i, j) + fit.shift - gt.values(i, j);
        sq += r * r;
        n += 1;
      }
    }
  }
  return std::sqrt(sq / static_cast<double>(n));
}

}  // namespace

AffineFit fit_scale_shift(const DepthMap& affine_pred, const DepthMap& metric_gt) {
  return fit_scale_shift_pooled({&affine_pred}, {&metric_gt});
}

AffineFit fit_scale_shift_pooled(const std::vector<const DepthMap*>& preds,
                                 const std::vector<const DepthMap*>& gts) {
  if (preds.empty() || preds.size() != gts.size()) {
    raise(Errc::kBadConfig, "fit needs matched prediction and ground-truth lists");
  }
  OlsAcc acc;
  for (std::size_t s = 0; s < preds.size(); ++s) acc.add(*preds[s], *gts[s]);
  AffineFit fit = acc.solve();
  fit.residual_rmse = residual_rmse(fit, preds, gts);
  return fit;
}

AffineApplied apply_affine(const DepthMap& depth, const AffineFit& fit) {
  AffineApplied out{depth, 0};
  for (Eigen::Index i = 0; i < depth.values.rows(); ++i) {
    for (Eigen::Index j = 0; j < depth.values.cols(); ++j) {
      const double v = fit.scale * depth.values(i, j) + fit.shift;
      if (v < 0.0) {
        out.depth.values(i, j) = 0.0;
        if (depth.valid(i, j)) out.clamped += 1;
      } else {
        out.depth.values(i, j) = v;
      }
    }
  }
  return out;
}

}  // namespace depeval
