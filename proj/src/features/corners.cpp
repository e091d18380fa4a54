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

#include <cmath>
#include <vector>

#include "depeval/features/extract.hpp"
#include "depeval/features/morphology.hpp"

namespace depeval {

namespace {

std::vector<double> gaussian_kernel(int window) {
  const double sigma = 0.3 * ((window - 1) * 0.5 - 1.0) + 0.8;
  std::vector<double> k(window);
  const int half = window / 2;
  double sum = 0.0;
  for (int t = -half; t <= half; ++t) {
    k[t + half] = std::exp(-0.5 * t * t / (sigma * sigma));
    sum += k[t + half];
  }
  for (double& v : k) v /= sum;
  return k;
}

GridD smooth(const GridD& in, const std::vector<double>& kernel) {
  const Eigen::Index h = in.rows();
  const Eigen::Index w = in.cols();
  const int half = static_cast<int>(kernel.size()) / 2;
  GridD tmp = GridD::Zero(h, w);
  for (Eigen::Index i = 0; i < h; ++i) {
    for (Eigen::Index j = 0; j < w; ++j) {
      double acc = 0.0;
      for (int t = -half; t <= half; ++t) {
        const Eigen::Index x = std::clamp<Eigen::Index>(j + t, 0, w - 1);
        acc += kernel[t + half] * in(i, x);
      }
      tmp(i, j) = acc;
    }
  }
  GridD out = GridD::Zero(h, w);
  for (Eigen::Index i = 0; i < h; ++i) {
    for (Eigen::Index j = 0; j < w; ++j) {
      double acc = 0.0;
      for (int t = -half; t <= half; ++t) {
        const Eigen::Index y = std::clamp<Eigen::Index>(i + t, 0, h - 1);
        acc += kernel[t + half] * tmp(y, j);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

}  // namespace

FeatureMap extract_corners(const RgbImage& img, const FeatureParams& params) {
  params.check();
  img.check();
  if (img.width() < params.window || img.height() < params.window) {
    raise(Errc::kDegenerateImage, "image smaller than the feature window");
  }
  const GridD gray = img.grayscale();
  const Gradients g = sobel_gradients(gray);
  const auto kernel = gaussian_kernel(params.window);
  const GridD sxx = smooth(g.gx.square(), kernel);
  const GridD syy = smooth(g.gy.square(), kernel);
  const GridD sxy = smooth((g.gx * g.gy).eval(), kernel);
  const GridD trace = sxx + syy;
  const GridD response = sxx * syy - sxy.square() - params.corner_k * trace.square();

  const Eigen::Index h = response.rows();
  const Eigen::Index w = response.cols();
  GridB seeds = GridB::Constant(h, w, false);
  const double max_response = response.maxCoeff();
  if (max_response > 0.0) {
    const double floor = params.corner_rel_threshold * max_response;
    for (Eigen::Index i = 0; i < h; ++i) {
      for (Eigen::Index j = 0; j < w; ++j) {
        const double r = response(i, j);
        if (r < floor) continue;
        bool peak = true;
        for (int dy = -1; dy <= 1 && peak; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if (dy == 0 && dx == 0) continue;
            const Eigen::Index y = i + dy;
            const Eigen::Index x = j + dx;
            if (y < 0 || y >= h || x < 0 || x >= w) continue;
            // Raster order breaks plateau ties: one seed per plateau.
            const bool earlier = y < i || (y == i && x < j);
            if (response(y, x) > r || (response(y, x) == r && earlier)) {
              peak = false;
              break;
            }
          }
        }
        seeds(i, j) = peak;
      }
    }
  }
  return FeatureMap{dilate_disk(seeds, params.corner_radius), FeatureKind::kCorner};
}

}  // namespace depeval
