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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace depeval {

// Delaunay triangulation of integer points (pixel coordinates) built
// incrementally with exact integer predicates, so grid degeneracies
// (cocircular squares, collinear runs) are handled without tolerances.
class Delaunay {
 public:
  struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;
  };

  // Duplicate coordinates keep the first occurrence.
  explicit Delaunay(const std::vector<Point>& points);

  // True when fewer than 3 distinct points exist or all are collinear; no
  // triangles then.
  bool degenerate() const { return degenerate_; }

  struct Interpolation {
    std::array<int, 3> vertices;  // indices into the constructor's points
    std::array<double, 3> weights;  // barycentric, sum to 1
  };

  // Containing triangle and barycentric weights of (x, y); nullopt when
  // outside the hull or degenerate. `hint` carries walk locality between
  // calls; pass the same int across a scanline.
  std::optional<Interpolation> interpolate(std::int64_t x, std::int64_t y, int* hint) const;

  // Vertex index triples of all finite triangles, for verification.
  std::vector<std::array<int, 3>> finite_triangles() const;

 private:
  struct Triangle {
    std::array<int, 3> v{};    // CCW; ghost vertex -1 sits at slot 2
    std::array<int, 3> adj{};  // adj[k] faces the edge opposite v[k]
    bool alive = false;
  };

  bool ghost(int t) const { return tris_[t].v[2] < 0; }
  std::int64_t px(int v) const { return points_[v].x; }
  std::int64_t py(int v) const { return points_[v].y; }
  bool conflicts(int t, std::int64_t x, std::int64_t y) const;
  int find_conflict_seed(std::int64_t x, std::int64_t y);
  int locate_finite(std::int64_t x, std::int64_t y, int* hint) const;
  void insert(int vertex);
  int alloc();
  void link(int a, int slot_a, int b);
  int slot_of_edge(int t, int u, int w) const;

  std::vector<Point> points_;
  std::vector<Triangle> tris_;
  std::vector<int> free_;
  std::vector<int> mark_;  // cavity membership, epoch-stamped
  int epoch_ = 0;
  int hint_ = -1;
  bool degenerate_ = true;
};

// Exact sign of the cross product (b - a) x (c - a): > 0 for a left turn.
int orient2d(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by,
             std::int64_t cx, std::int64_t cy);

// Exact sign of the incircle determinant for CCW (a, b, c): > 0 when d is
// strictly inside the circumcircle.
int incircle(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by,
             std::int64_t cx, std::int64_t cy, std::int64_t dx, std::int64_t dy);

}  // namespace depeval
