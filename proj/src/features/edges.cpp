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
#include <deque>

#include "depeval/features/extract.hpp"
#include "depeval/features/morphology.hpp"

namespace depeval {

void FeatureParams::check() const {
  if (edge_low < 0.0 || edge_high < edge_low) {
    raise(Errc::kBadConfig, "edge thresholds must satisfy 0 <= low <= high");
  }
  if (edge_thickness < 0 || corner_radius < 0) {
    raise(Errc::kBadConfig, "thickness and radius must be non-negative");
  }
  if (corner_k < 0.0) raise(Errc::kBadConfig, "corner k must be non-negative");
  if (corner_rel_threshold <= 0.0 || corner_rel_threshold > 1.0) {
    raise(Errc::kBadConfig, "corner threshold must be in (0,1]");
  }
  if (window < 3 || window % 2 == 0) {
    raise(Errc::kBadConfig, "window must be odd and >= 3");
  }
}

Gradients sobel_gradients(const GridD& gray) {
  const Eigen::Index h = gray.rows();
  const Eigen::Index w = gray.cols();
  Gradients g{GridD::Zero(h, w), GridD::Zero(h, w)};
  const auto at = [&](Eigen::Index i, Eigen::Index j) {
    i = std::clamp<Eigen::Index>(i, 0, h - 1);
    j = std::clamp<Eigen::Index>(j, 0, w - 1);
    return gray(i, j);
  };
  for (Eigen::Index i = 0; i < h; ++i) {
    for (Eigen::Index j = 0; j < w; ++j) {
      g.gx(i, j) = at(i - 1, j + 1) + 2.0 * at(i, j + 1) + at(i + 1, j + 1) -
                   at(i - 1, j - 1) - 2.0 * at(i, j - 1) - at(i + 1, j - 1);
      g.gy(i, j) = at(i + 1, j - 1) + 2.0 * at(i + 1, j) + at(i + 1, j + 1) -
                   at(i - 1, j - 1) - 2.0 * at(i - 1, j) - at(i - 1, j + 1);
    }
  }
  return g;
}

namespace {

// Gradient-direction non-maximum suppression; zeroes every pixel that is not
// a local ridge crest, so contours come out one pixel wide.
GridD suppress_non_maxima(const GridD& mag, const Gradients& g) {
  const Eigen::Index h = mag.rows();
  const Eigen::Index w = mag.cols();
  const auto at = [&](Eigen::Index i, Eigen::Index j) {
    if (i < 0 || i >= h || j < 0 || j >= w) return 0.0;
    return mag(i, j);
  };
  GridD out = GridD::Zero(h, w);
  for (Eigen::Index i = 0; i < h; ++i) {
    for (Eigen::Index j = 0; j < w; ++j) {
      const double m = mag(i, j);
      if (m <= 0.0) continue;
      double angle = std::atan2(g.gy(i, j), g.gx(i, j)) * 180.0 / M_PI;
      if (angle < 0.0) angle += 180.0;
      double a, b;
      if (angle < 22.5 || angle >= 157.5) {
        a = at(i, j - 1);
        b = at(i, j + 1);
      } else if (angle < 67.5) {
        a = at(i - 1, j - 1);
        b = at(i + 1, j + 1);
      } else if (angle < 112.5) {
        a = at(i - 1, j);
        b = at(i + 1, j);
      } else {
        a = at(i - 1, j + 1);
        b = at(i + 1, j - 1);
      }
      // One strict side breaks plateau ties, keeping a single crest pixel.
      if (m > a && m >= b) out(i, j) = m;
    }
  }
  return out;
}

GridB hysteresis(const GridD& mag, double low, double high) {
  const Eigen::Index h = mag.rows();
  const Eigen::Index w = mag.cols();
  GridB edge = GridB::Constant(h, w, false);
  std::deque<std::pair<Eigen::Index, Eigen::Index>> queue;
  for (Eigen::Index i = 0; i < h; ++i) {
    for (Eigen::Index j = 0; j < w; ++j) {
      if (mag(i, j) >= high && !edge(i, j)) {
        edge(i, j) = true;
        queue.emplace_back(i, j);
      }
    }
  }
  while (!queue.empty()) {
    const auto [i, j] = queue.front();
    queue.pop_front();
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        const Eigen::Index y = i + dy;
        const Eigen::Index x = j + dx;
        if (y < 0 || y >= h || x < 0 || x >= w || edge(y, x)) continue;
        if (mag(y, x) >= low) {
          edge(y, x) = true;
          queue.emplace_back(y, x);
        }
      }
    }
  }
  return edge;
}

// Border following over a binary raster. Traces every outer and hole border
// of the 8-connected foreground components; the traced set is exactly the
// foreground pixels with a 4-adjacent background pixel (the frame counts as
// background).
GridB follow_borders(const GridB& fg) {
  const Eigen::Index h = fg.rows();
  const Eigen::Index w = fg.cols();
  // Clockwise neighbor order starting east; counterclockwise is the reverse
  // walk of the same table.
  static constexpr int kCw[8][2] = {{0, 1},  {1, 1},   {1, 0},  {1, -1},
                                    {0, -1}, {-1, -1}, {-1, 0}, {-1, 1}};
  const auto dir_of = [&](int dy, int dx) {
    for (int d = 0; d < 8; ++d) {
      if (kCw[d][0] == dy && kCw[d][1] == dx) return d;
    }
    return 0;
  };

  GridI64 f = GridI64::Zero(h, w);
  for (Eigen::Index i = 0; i < h; ++i) {
    for (Eigen::Index j = 0; j < w; ++j) {
      if (fg(i, j)) f(i, j) = 1;
    }
  }
  const auto val = [&](Eigen::Index i, Eigen::Index j) -> std::int64_t {
    if (i < 0 || i >= h || j < 0 || j >= w) return 0;
    return f(i, j);
  };

  std::int64_t nbd = 1;
  for (Eigen::Index i = 0; i < h; ++i) {
    for (Eigen::Index j = 0; j < w; ++j) {
      if (f(i, j) == 0) continue;
      Eigen::Index i2, j2;
      if (f(i, j) == 1 && val(i, j - 1) == 0) {
        i2 = i;
        j2 = j - 1;  // outer border
      } else if (f(i, j) >= 1 && val(i, j + 1) == 0) {
        i2 = i;
        j2 = j + 1;  // hole border
      } else {
        continue;
      }
      ++nbd;

      // Clockwise from (i2,j2): the first foreground neighbor of (i,j).
      const int start = dir_of(static_cast<int>(i2 - i), static_cast<int>(j2 - j));
      Eigen::Index i1 = -1, j1 = -1;
      for (int k = 0; k < 8; ++k) {
        const int d = (start + k) % 8;
        if (val(i + kCw[d][0], j + kCw[d][1]) != 0) {
          i1 = i + kCw[d][0];
          j1 = j + kCw[d][1];
          break;
        }
      }
      if (i1 < 0) {
        f(i, j) = -nbd;  // isolated pixel
        continue;
      }

      i2 = i1;
      j2 = j1;
      Eigen::Index i3 = i, j3 = j;
      while (true) {
        // Counterclockwise around (i3,j3), starting after (i2,j2).
        const int from = dir_of(static_cast<int>(i2 - i3), static_cast<int>(j2 - j3));
        Eigen::Index i4 = -1, j4 = -1;
        bool east_was_background = false;
        for (int k = 1; k <= 8; ++k) {
          const int d = ((from - k) % 8 + 8) % 8;
          const Eigen::Index y = i3 + kCw[d][0];
          const Eigen::Index x = j3 + kCw[d][1];
          if (val(y, x) != 0) {
            i4 = y;
            j4 = x;
            break;
          }
          if (d == 0) east_was_background = true;
        }
        if (east_was_background) {
          f(i3, j3) = -nbd;
        } else if (f(i3, j3) == 1) {
          f(i3, j3) = nbd;
        }
        if (i4 == i && j4 == j && i3 == i1 && j3 == j1) break;
        i2 = i3;
        j2 = j3;
        i3 = i4;
        j3 = j4;
      }
    }
  }

  GridB border = GridB::Constant(h, w, false);
  for (Eigen::Index i = 0; i < h; ++i) {
    for (Eigen::Index j = 0; j < w; ++j) {
      border(i, j) = f(i, j) != 0 && f(i, j) != 1;
    }
  }
  return border;
}

}  // namespace

FeatureMap extract_edges(const RgbImage& img, const FeatureParams& params) {
  params.check();
  img.check();
  if (img.width() < params.window || img.height() < params.window) {
    raise(Errc::kDegenerateImage, "image smaller than the feature window");
  }
  const GridD gray = img.grayscale();
  const Gradients g = sobel_gradients(gray);
  const GridD mag = (g.gx.square() + g.gy.square()).sqrt();
  const GridD crest = suppress_non_maxima(mag, g);
  const GridB binary = hysteresis(crest, params.edge_low, params.edge_high);
  const GridB contour = follow_borders(binary);
  return FeatureMap{dilate_disk(contour, params.edge_thickness), FeatureKind::kEdge};
}

FeatureMap union_features(const FeatureMap& a, const FeatureMap& b) {
  if (!same_shape(a.active, b.active)) {
    raise(Errc::kDimensionMismatch, "feature maps differ in shape");
  }
  return FeatureMap{a.active || b.active, FeatureKind::kUnion};
}

}  // namespace depeval
