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

#include "depeval/core/image.hpp"

namespace depeval {

struct FeatureParams {
  double edge_low = 50.0;    // hysteresis thresholds on gradient magnitude
  double edge_high = 150.0;
  int edge_thickness = 2;    // dilation radius around contour pixels
  double corner_k = 0.04;    // Harris sensitivity
  double corner_rel_threshold = 0.01;  // fraction of the max response
  int corner_radius = 3;     // disk radius stamped on each corner seed
  int window = 5;            // Gaussian window of the structure tensor

  void check() const;
};

// Contour pixels of the image: grayscale -> Sobel magnitude -> directional
// non-maximum suppression -> hysteresis -> border following -> dilation by
// edge_thickness.
FeatureMap extract_edges(const RgbImage& img, const FeatureParams& params);

// Harris corner seeds stamped with disks of corner_radius.
FeatureMap extract_corners(const RgbImage& img, const FeatureParams& params);

FeatureMap union_features(const FeatureMap& a, const FeatureMap& b);

// Sobel 3x3 gradients of a grayscale image, replicate border. gx runs along
// columns, gy along rows.
struct Gradients {
  GridD gx;
  GridD gy;
};

Gradients sobel_gradients(const GridD& gray);

}  // namespace depeval
