#pragma once

#include <unistd.h>

#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "depeval/core/image.hpp"
#include "depeval/core/weight_table.hpp"
#include "depeval/io/depth_io.hpp"

namespace testutil {

using namespace depeval;

// Deterministic random source. Gaussians come from Box-Muller over
// mt19937_64 so the sequences do not depend on any library distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double gaussian(double mean = 0.0, double sigma = 1.0) {
    constexpr double kPi = 3.14159265358979323846;
    if (have_spare_) {
      have_spare_ = false;
      return mean + sigma * spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return mean + sigma * r * std::cos(2.0 * kPi * u2);
  }

 private:
  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

inline GridD grid(const std::vector<std::vector<double>>& rows) {
  GridD g(static_cast<Eigen::Index>(rows.size()),
          static_cast<Eigen::Index>(rows.front().size()));
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      g(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return g;
}

inline GridB mask_of(const std::vector<std::vector<int>>& rows) {
  GridB g(static_cast<Eigen::Index>(rows.size()),
          static_cast<Eigen::Index>(rows.front().size()));
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      g(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0;
    }
  }
  return g;
}

inline DepthMap dense(const std::vector<std::vector<double>>& rows) {
  return make_dense_depth(grid(rows));
}

// -1 marks the unlabeled sentinel.
inline SegmentationMask seg_of(const std::vector<std::vector<int>>& rows,
                               const std::map<int, std::string>& names) {
  SegmentationMask seg;
  seg.labels.resize(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.front().size()));
  for (Eigen::Index i = 0; i < seg.labels.rows(); ++i) {
    for (Eigen::Index j = 0; j < seg.labels.cols(); ++j) {
      const int v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      seg.labels(i, j) =
          v < 0 ? SegmentationMask::kUnlabeled : static_cast<std::uint16_t>(v);
    }
  }
  for (const auto& [id, name] : names) {
    seg.id_to_name[static_cast<std::uint16_t>(id)] = name;
  }
  seg.check();
  return seg;
}

inline RgbImage flat_rgb(int h, int w, std::uint8_t v) {
  RgbImage img;
  img.r = GridU8::Constant(h, w, v);
  img.g = img.r;
  img.b = img.r;
  return img;
}

inline RgbImage gray_rgb(const GridU8& g) {
  RgbImage img;
  img.r = g;
  img.g = g;
  img.b = g;
  return img;
}

// Three super-classes with weights 0.5 / 0.3 / 0.2.
inline WeightTable abc_table() {
  WeightTable t;
  t.super_classes = {{"A", 0.5}, {"B", 0.3}, {"C", 0.2}};
  t.mapping = {{"a", "A"}, {"b", "B"}, {"c", "C"}};
  t.validate();
  return t;
}

/// Hand-derived fixture: class minima 2 / 10 / 40 m, scene max 50 m, so
// d_class = 48 / 40 / 10 and w_dist = 1, 30/38, 0. Per-class MAEs 1 / 2 / 4
// give e_class = 0.5*1*1 + 0.3*(30/38)*2 + 0.2*0*4 = 0.97368421...
struct ThreeClassScene {
  DepthMap gt;
  DepthMap pred;
  SegmentationMask seg;
  WeightTable weights;
};

inline ThreeClassScene three_class_scene() {
  ThreeClassScene s;
  s.gt = dense({{2.0, 10.0, 40.0, 50.0}});
  s.pred = dense({{3.0, 12.0, 44.0, 54.0}});
  s.seg = seg_of({{0, 1, 2, 2}}, {{0, "a"}, {1, "b"}, {2, "c"}});
  s.weights = abc_table();
  return s;
}

inline DepthMap random_depth(Rng& rng, int h, int w, double lo = 1.0, double hi = 80.0) {
  GridD values(h, w);
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    for (Eigen::Index j = 0; j < values.cols(); ++j) values(i, j) = rng.uniform(lo, hi);
  }
  return make_dense_depth(std::move(values));
}

inline SegmentationMask random_seg(Rng& rng, int h, int w,
                                   const std::vector<std::string>& names) {
  std::vector<std::vector<int>> rows(h, std::vector<int>(w, 0));
  for (auto& row : rows) {
    for (int& v : row) v = rng.uniform_int(0, static_cast<int>(names.size()) - 1);
  }
  std::map<int, std::string> table;
  for (std::size_t i = 0; i < names.size(); ++i) table[static_cast<int>(i)] = names[i];
  return seg_of(rows, table);
}

class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    dir_ = std::filesystem::temp_directory_path() /
           ("depeval-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(dir_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

// On-disk dataset: `scenes` scenes of one frame each, models "good" (small
// uniform offset) and "bad" (noisy, car region badly wrong), sparse planar
// ground truth, a sky band at the top, one unlabeled column.
inline void write_synthetic_dataset(const std::filesystem::path& root, int scenes,
                                    int h = 40, int w = 56) {
  std::filesystem::create_directories(root);
  write_name_table(root / "labels.names", {{0, "car"}, {1, "person"}, {2, "sky"}});
  for (int s = 0; s < scenes; ++s) {
    Rng rng(1000 + static_cast<std::uint64_t>(s));
    const std::filesystem::path dir =
        root / ("scene" + std::to_string(s)) / "frame0";
    std::filesystem::create_directories(dir / "pred");

    GridD values(h, w);
    GridB valid(h, w);
    for (int i = 0; i < h; ++i) {
      for (int j = 0; j < w; ++j) {
        values(i, j) = 5.0 + 0.1 * j + 0.2 * i + 0.5 * s;
        valid(i, j) = rng.uniform() < 0.35;
      }
    }
    // Densification needs a usable hull; pin the corners.
    valid(0, 0) = valid(0, w - 1) = valid(h - 1, 0) = valid(h - 1, w - 1) = true;
    const DepthMap gt = make_depth(values, valid);
    write_depth_f32(dir / "gt.f32", gt);

    SegmentationMask seg;
    seg.labels = GridU16::Constant(h, w, 0);
    for (int i = 0; i < h; ++i) {
      for (int j = 0; j < w; ++j) {
        if (i < 4) seg.labels(i, j) = 2;           // sky band
        else if (j >= w / 2) seg.labels(i, j) = 1; // person half
        if (j == w - 1) seg.labels(i, j) = SegmentationMask::kUnlabeled;
      }
    }
    seg.id_to_name = {{0, "car"}, {1, "person"}, {2, "sky"}};
    write_labels_png(dir / "labels.png", seg);

    GridU8 gray(h, w);
    for (int i = 0; i < h; ++i) {
      for (int j = 0; j < w; ++j) {
        gray(i, j) = static_cast<std::uint8_t>(30 + (3 * j + 2 * i) % 60);
      }
    }
    // A bright block gives the edge and corner extractors something to find.
    for (int i = h / 2; i < h / 2 + 8; ++i) {
      for (int j = w / 3; j < w / 3 + 12; ++j) gray(i, j) = 220;
    }
    write_rgb(dir / "rgb.png", gray_rgb(gray));

    DepthMap good = make_dense_depth(values + 0.05);
    write_depth_f32(dir / "pred" / "good.f32", good);

    GridD bad_values = values;
    for (int i = 0; i < h; ++i) {
      for (int j = 0; j < w; ++j) {
        bad_values(i, j) += rng.gaussian(0.0, 0.5);
        if (seg.labels(i, j) == 0) bad_values(i, j) += 2.0;
        bad_values(i, j) = std::max(0.0, bad_values(i, j));
      }
    }
    write_depth_f32(dir / "pred" / "bad.f32", make_dense_depth(bad_values));
  }
}

}  // namespace testutil
