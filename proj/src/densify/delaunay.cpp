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

#include "depeval/densify/delaunay.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "depeval/core/errors.hpp"

namespace depeval {

namespace {

using I128 = __int128;

int sign_of(I128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

int orient2d(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by,
             std::int64_t cx, std::int64_t cy) {
  const I128 lhs = I128(bx - ax) * I128(cy - ay);
  const I128 rhs = I128(by - ay) * I128(cx - ax);
  return sign_of(lhs - rhs);
}

int incircle(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by,
             std::int64_t cx, std::int64_t cy, std::int64_t dx, std::int64_t dy) {
  const I128 adx = ax - dx, ady = ay - dy;
  const I128 bdx = bx - dx, bdy = by - dy;
  const I128 cdx = cx - dx, cdy = cy - dy;
  const I128 ad = adx * adx + ady * ady;
  const I128 bd = bdx * bdx + bdy * bdy;
  const I128 cd = cdx * cdx + cdy * cdy;
  const I128 det = adx * (bdy * cd - cdy * bd) - ady * (bdx * cd - cdx * bd) +
                   ad * (bdx * cdy - cdx * bdy);
  return sign_of(det);
}

namespace {

// Strictly inside the open segment (u, w); all three collinear.
bool within_open_segment(std::int64_t ux, std::int64_t uy, std::int64_t wx,
                         std::int64_t wy, std::int64_t x, std::int64_t y) {
  const I128 du = I128(x - ux) * I128(wx - ux) + I128(y - uy) * I128(wy - uy);
  const I128 dw = I128(x - wx) * I128(ux - wx) + I128(y - wy) * I128(uy - wy);
  return du > 0 && dw > 0;
}

}  // namespace

bool Delaunay::conflicts(int t, std::int64_t x, std::int64_t y) const {
  const Triangle& tri = tris_[t];
  if (tri.v[2] < 0) {
    const int u = tri.v[0], w = tri.v[1];
    const int o = orient2d(px(u), py(u), px(w), py(w), x, y);
    if (o < 0) return true;
    if (o == 0) return within_open_segment(px(u), py(u), px(w), py(w), x, y);
    return false;
  }
  return incircle(px(tri.v[0]), py(tri.v[0]), px(tri.v[1]), py(tri.v[1]), px(tri.v[2]),
                  py(tri.v[2]), x, y) > 0;
}

int Delaunay::alloc() {
  if (!free_.empty()) {
    const int t = free_.back();
    free_.pop_back();
    tris_[t] = Triangle{};
    tris_[t].alive = true;
    return t;
  }
  tris_.push_back(Triangle{});
  tris_.back().alive = true;
  return static_cast<int>(tris_.size()) - 1;
}

int Delaunay::slot_of_edge(int t, int u, int w) const {
  for (int k = 0; k < 3; ++k) {
    const int a = tris_[t].v[(k + 1) % 3];
    const int b = tris_[t].v[(k + 2) % 3];
    if ((a == u && b == w) || (a == w && b == u)) return k;
  }
  raise(Errc::kBadFormat, "triangulation adjacency corrupted");
}

void Delaunay::link(int a, int slot_a, int b) {
  tris_[a].adj[slot_a] = b;
  const int u = tris_[a].v[(slot_a + 1) % 3];
  const int w = tris_[a].v[(slot_a + 2) % 3];
  tris_[b].adj[slot_of_edge(b, u, w)] = a;
}

int Delaunay::find_conflict_seed(std::int64_t x, std::int64_t y) {
  int t = hint_;
  const int cap = static_cast<int>(tris_.size()) + 8;
  for (int step = 0; step < cap; ++step) {
    if (ghost(t)) {
      if (conflicts(t, x, y)) return t;
      t = tris_[t].adj[2];  // back into the finite interior
      continue;
    }
    int next = -1;
    for (int k = 0; k < 3; ++k) {
      const int u = tris_[t].v[(k + 1) % 3];
      const int w = tris_[t].v[(k + 2) % 3];
      if (orient2d(px(u), py(u), px(w), py(w), x, y) < 0) {
        next = tris_[t].adj[k];
        break;
      }
    }
    if (next < 0) {
      // Containing triangle; conflicts unless the point is a duplicate.
      return conflicts(t, x, y) ? t : -1;
    }
    t = next;
  }
  // Degenerate walk loop; scan everything instead.
  for (int i = 0; i < static_cast<int>(tris_.size()); ++i) {
    if (tris_[i].alive && conflicts(i, x, y)) return i;
  }
  return -1;
}

void Delaunay::insert(int vertex) {
  const std::int64_t x = points_[vertex].x;
  const std::int64_t y = points_[vertex].y;
  const int seed = find_conflict_seed(x, y);
  if (seed < 0) return;  // duplicate of an existing vertex

  // Grow the cavity of conflicting triangles.
  if (mark_.size() < tris_.size()) mark_.resize(tris_.size(), 0);
  ++epoch_;
  std::vector<int> cavity{seed};
  mark_[seed] = epoch_;
  struct BoundaryEdge {
    int u, w;      // directed as stored in the cavity triangle
    int outside;   // surviving neighbor across
  };
  std::vector<BoundaryEdge> boundary;
  for (std::size_t head = 0; head < cavity.size(); ++head) {
    const int t = cavity[head];
    for (int k = 0; k < 3; ++k) {
      const int n = tris_[t].adj[k];
      if (mark_[n] == epoch_) continue;
      if (conflicts(n, x, y)) {
        mark_[n] = epoch_;
        cavity.push_back(n);
      } else {
        boundary.push_back({tris_[t].v[(k + 1) % 3], tris_[t].v[(k + 2) % 3], n});
      }
    }
  }

  // One new triangle per boundary edge, all sharing the new vertex.
  std::vector<int> fresh;
  fresh.reserve(boundary.size());
  for (const BoundaryEdge& e : boundary) {
    const int t = alloc();
    Triangle& tri = tris_[t];
    if (e.u >= 0 && e.w >= 0) {
      const int o = orient2d(px(e.u), py(e.u), px(e.w), py(e.w), x, y);
      if (o == 0) raise(Errc::kBadFormat, "degenerate cavity edge");
      if (o > 0) tri.v = {e.u, e.w, vertex};
      else tri.v = {e.w, e.u, vertex};  // edge of a ghost; the point lies right of it
    } else if (e.w < 0) {
      tri.v = {vertex, e.u, -1};  // (u, inf) becomes hull edge vertex->u
    } else {
      tri.v = {e.w, vertex, -1};  // (inf, w) becomes hull edge w->vertex
    }
    fresh.push_back(t);
  }

  // Normalizing rotated the ghost edges, so resolve slots by content: the
  // boundary edge is the one not touching the new vertex.
  std::map<std::pair<int, int>, std::pair<int, int>> open_edges;
  for (std::size_t idx = 0; idx < fresh.size(); ++idx) {
    const int t = fresh[idx];
    const BoundaryEdge& e = boundary[idx];
    link(t, slot_of_edge(t, e.u, e.w), e.outside);
    for (int k = 0; k < 3; ++k) {
      const int a = tris_[t].v[(k + 1) % 3];
      const int b = tris_[t].v[(k + 2) % 3];
      if (a != vertex && b != vertex) continue;  // the boundary edge
      const auto key = std::minmax(a, b);
      const auto it = open_edges.find(key);
      if (it == open_edges.end()) {
        open_edges[key] = {t, k};
      } else {
        tris_[t].adj[k] = it->second.first;
        tris_[it->second.first].adj[it->second.second] = t;
        open_edges.erase(it);
      }
    }
  }
  if (!open_edges.empty()) {
    raise(Errc::kBadFormat, "triangulation cavity did not close");
  }

  for (const int t : cavity) {
    tris_[t].alive = false;
    free_.push_back(t);
  }
  hint_ = fresh.front();
}

Delaunay::Delaunay(const std::vector<Point>& points) : points_(points) {
  std::vector<int> order(points_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (points_[a].y != points_[b].y) return points_[a].y < points_[b].y;
    if (points_[a].x != points_[b].x) return points_[a].x < points_[b].x;
    return a < b;
  });
  order.erase(std::unique(order.begin(), order.end(),
                          [&](int a, int b) {
                            return points_[a].x == points_[b].x &&
                                   points_[a].y == points_[b].y;
                          }),
              order.end());
  if (order.size() < 3) return;

  // First three non-collinear points bootstrap the triangulation; the
  // lexicographic sort keeps any skipped collinear prefix monotone along its
  // line, so those points insert cleanly afterwards.
  const int a = order[0];
  const int b = order[1];
  std::size_t k = 2;
  while (k < order.size() &&
         orient2d(px(a), py(a), px(b), py(b), px(order[k]), py(order[k])) == 0) {
    ++k;
  }
  if (k == order.size()) return;  // all collinear
  int c = order[k];
  int v0 = a, v1 = b;
  if (orient2d(px(a), py(a), px(b), py(b), px(c), py(c)) < 0) std::swap(v0, v1);

  degenerate_ = false;
  tris_.reserve(points_.size() * 2 + 8);
  const int t0 = alloc();
  tris_[t0].v = {v0, v1, c};
  const int g01 = alloc();
  tris_[g01].v = {v0, v1, -1};
  const int g12 = alloc();
  tris_[g12].v = {v1, c, -1};
  const int g20 = alloc();
  tris_[g20].v = {c, v0, -1};
  // Finite slots face (v1,c), (c,v0), (v0,v1); ghost slot 2 faces its hull edge.
  tris_[t0].adj = {g12, g20, g01};
  tris_[g01].adj = {g12, g20, t0};
  tris_[g12].adj = {g20, g01, t0};
  tris_[g20].adj = {g01, g12, t0};
  hint_ = t0;

  for (std::size_t i = 2; i < order.size(); ++i) {
    if (static_cast<std::size_t>(i) == k) continue;
    insert(order[i]);
  }
}

int Delaunay::locate_finite(std::int64_t x, std::int64_t y, int* hint) const {
  if (degenerate_) return -1;
  int t = (hint != nullptr && *hint >= 0 && *hint < static_cast<int>(tris_.size()) &&
           tris_[*hint].alive)
              ? *hint
              : hint_;
  const int cap = static_cast<int>(tris_.size()) + 8;
  for (int step = 0; step < cap; ++step) {
    if (ghost(t)) {
      // Strictly outside the hull when right of the hull edge; walking in
      // from the hint otherwise.
      const int u = tris_[t].v[0], w = tris_[t].v[1];
      if (orient2d(px(u), py(u), px(w), py(w), x, y) < 0) return -1;
      t = tris_[t].adj[2];
      continue;
    }
    int next = -1;
    for (int k = 0; k < 3; ++k) {
      const int u = tris_[t].v[(k + 1) % 3];
      const int w = tris_[t].v[(k + 2) % 3];
      if (orient2d(px(u), py(u), px(w), py(w), x, y) < 0) {
        next = tris_[t].adj[k];
        break;
      }
    }
    if (next < 0) {
      if (hint != nullptr) *hint = t;
      return t;
    }
    t = next;
  }
  // Walk loop fallback: exhaustive containment scan.
  for (int i = 0; i < static_cast<int>(tris_.size()); ++i) {
    if (!tris_[i].alive || ghost(i)) continue;
    bool inside = true;
    for (int k = 0; k < 3 && inside; ++k) {
      const int u = tris_[i].v[(k + 1) % 3];
      const int w = tris_[i].v[(k + 2) % 3];
      inside = orient2d(px(u), py(u), px(w), py(w), x, y) >= 0;
    }
    if (inside) {
      if (hint != nullptr) *hint = i;
      return i;
    }
  }
  return -1;
}

std::optional<Delaunay::Interpolation> Delaunay::interpolate(std::int64_t x,
                                                             std::int64_t y,
                                                             int* hint) const {
  const int t = locate_finite(x, y, hint);
  if (t < 0) return std::nullopt;
  const auto& v = tris_[t].v;
  // Signed sub-areas against the full area; integers stay exact within
  // double range for pixel coordinates.
  const auto area2 = [&](int p, int q, std::int64_t rx, std::int64_t ry) {
    return static_cast<double>(I128(px(q) - px(p)) * I128(ry - py(p)) -
                               I128(py(q) - py(p)) * I128(rx - px(p)));
  };
  const double full = area2(v[0], v[1], px(v[2]), py(v[2]));
  Interpolation out;
  out.vertices = {v[0], v[1], v[2]};
  out.weights = {area2(v[1], v[2], x, y) / full, area2(v[2], v[0], x, y) / full,
                 area2(v[0], v[1], x, y) / full};
  return out;
}

std::vector<std::array<int, 3>> Delaunay::finite_triangles() const {
  std::vector<std::array<int, 3>> out;
  for (const Triangle& t : tris_) {
    if (t.alive && t.v[2] >= 0) out.push_back(t.v);
  }
  return out;
}

}  // namespace depeval
