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
#include <vector>

#include "depeval/core/image.hpp"

namespace depeval {

struct AffineFit {
  double scale = 1.0;
  double shift = 0.0;
  double residual_rmse = 0.0;
  std::int64_t sample_count = 0;
};

// Least-squares fit of gt = scale * pred + shift over the comparison domain.
AffineFit fit_scale_shift(const DepthMap& affine_pred, const DepthMap& metric_gt);

// Pooled fit over several frames, e.g. a calibration subset of the dataset.
AffineFit fit_scale_shift_pooled(const std::vector<const DepthMap*>& preds,
                                 const std::vector<const DepthMap*>& gts);

struct AffineApplied {
  DepthMap depth;
  std::int64_t clamped = 0;  // values that went negative and were clamped
};

AffineApplied apply_affine(const DepthMap& depth, const AffineFit& fit);

}  // namespace depeval
