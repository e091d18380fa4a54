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

#include "depeval/io/depth_io.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

#include "depeval/io/png_io.hpp"

namespace depeval {

namespace {

constexpr char kMagic[8] = {'D', 'E', 'P', 'T', 'H', 'F', '3', '2'};

std::uint32_t read_u32le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

void write_u32le(std::ostream& out, std::uint32_t v) {
  const unsigned char bytes[4] = {
      static_cast<unsigned char>(v & 0xFF), static_cast<unsigned char>((v >> 8) & 0xFF),
      static_cast<unsigned char>((v >> 16) & 0xFF),
      static_cast<unsigned char>((v >> 24) & 0xFF)};
  out.write(reinterpret_cast<const char*>(bytes), 4);
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

DepthMap read_depth_png16(const std::filesystem::path& path, double scale_divisor) {
  if (scale_divisor <= 0.0) raise(Errc::kBadConfig, "scale divisor must be positive");
  const PngImage png = read_png(path);
  if (png.channels != 1 || png.bit_depth != 16) {
    raise(Errc::kBadFormat, "'" + path.string() + "' is not a 16-bit single-channel PNG");
  }
  DepthMap depth;
  depth.values = GridD::Zero(png.height, png.width);
  depth.valid = GridB::Constant(png.height, png.width, false);
  for (int i = 0; i < png.height; ++i) {
    for (int j = 0; j < png.width; ++j) {
      const std::uint16_t raw = png.at(i, j, 0);
      if (raw == 0) continue;  // 0 encodes missing depth
      depth.values(i, j) = static_cast<double>(raw) / scale_divisor;
      depth.valid(i, j) = true;
    }
  }
  return depth;
}

void write_depth_png16(const std::filesystem::path& path, const DepthMap& depth,
                       double scale_divisor) {
  if (scale_divisor <= 0.0) raise(Errc::kBadConfig, "scale divisor must be positive");
  depth.check();
  GridU16 raw = GridU16::Zero(depth.values.rows(), depth.values.cols());
  for (Eigen::Index i = 0; i < depth.values.rows(); ++i) {
    for (Eigen::Index j = 0; j < depth.values.cols(); ++j) {
      if (!depth.valid(i, j)) continue;
      double q = std::round(depth.values(i, j) * scale_divisor);
      // Raw 0 means invalid, so valid near-zero depths saturate at 1.
      q = std::clamp(q, 1.0, 65535.0);
      raw(i, j) = static_cast<std::uint16_t>(q);
    }
  }
  write_png_gray16(path, raw);
}

DepthMap read_depth_f32(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::kIoError, "cannot open '" + path.string() + "'");
  unsigned char header[16];
  in.read(reinterpret_cast<char*>(header), 16);
  if (in.gcount() != 16 || std::memcmp(header, kMagic, 8) != 0) {
    raise(Errc::kBadFormat, "'" + path.string() + "' lacks the depth f32 header");
  }
  const std::uint32_t width = read_u32le(header + 8);
  const std::uint32_t height = read_u32le(header + 12);
  if (width == 0 || height == 0 || width > (1u << 20) || height > (1u << 20)) {
    raise(Errc::kBadFormat, "'" + path.string() + "' has implausible dimensions");
  }
  const std::size_t count = static_cast<std::size_t>(width) * height;
  std::vector<unsigned char> payload(count * 4);
  in.read(reinterpret_cast<char*>(payload.data()), static_cast<std::streamsize>(count * 4));
  if (static_cast<std::size_t>(in.gcount()) != count * 4) {
    raise(Errc::kBadFormat, "'" + path.string() + "' is truncated");
  }

  DepthMap depth;
  depth.values = GridD::Zero(height, width);
  depth.valid = GridB::Constant(height, width, false);
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint32_t bits = read_u32le(payload.data() + k * 4);
    float v;
    std::memcpy(&v, &bits, 4);
    const Eigen::Index i = static_cast<Eigen::Index>(k / width);
    const Eigen::Index j = static_cast<Eigen::Index>(k % width);
    if (std::isfinite(v) && v >= 0.0f) {
      depth.values(i, j) = static_cast<double>(v);
      depth.valid(i, j) = true;
    }
  }
  return depth;
}

void write_depth_f32(const std::filesystem::path& path, const DepthMap& depth) {
  depth.check();
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::kIoError, "cannot write '" + path.string() + "'");
  out.write(kMagic, 8);
  write_u32le(out, static_cast<std::uint32_t>(depth.values.cols()));
  write_u32le(out, static_cast<std::uint32_t>(depth.values.rows()));
  for (Eigen::Index i = 0; i < depth.values.rows(); ++i) {
    for (Eigen::Index j = 0; j < depth.values.cols(); ++j) {
      const float v = depth.valid(i, j) ? static_cast<float>(depth.values(i, j))
                                        : std::numeric_limits<float>::quiet_NaN();
      std::uint32_t bits;
      std::memcpy(&bits, &v, 4);
      write_u32le(out, bits);
    }
  }
  if (!out) raise(Errc::kIoError, "failed writing '" + path.string() + "'");
}

SegmentationMask read_labels_png(const std::filesystem::path& path,
                                 const std::map<std::uint16_t, std::string>& name_table) {
  const PngImage png = read_png(path);
  if (png.channels != 1) {
    raise(Errc::kBadFormat, "'" + path.string() + "' is not a single-channel label PNG");
  }
  SegmentationMask seg;
  seg.labels = GridU16::Zero(png.height, png.width);
  seg.id_to_name = name_table;
  for (int i = 0; i < png.height; ++i) {
    for (int j = 0; j < png.width; ++j) {
      seg.labels(i, j) = png.at(i, j, 0);
    }
  }
  try {
    seg.check();
  } catch (const Error& e) {
    raise(e.code(), path.string() + ": " + e.what());
  }
  return seg;
}

void write_labels_png(const std::filesystem::path& path, const SegmentationMask& seg) {
  GridU16 raw = seg.labels;
  write_png_gray16(path, raw);
}

std::map<std::uint16_t, std::string> read_name_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::kIoError, "cannot open '" + path.string() + "'");
  std::map<std::uint16_t, std::string> table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fail = [&](const std::string& msg) {
      raise(Errc::kBadFormat, path.string() + " line " + std::to_string(line_no) + ": " + msg);
    };
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto tab = stripped.find('\t');
    if (tab == std::string::npos) fail("expected 'id<TAB>name'");
    const std::string id_text = trim(stripped.substr(0, tab));
    const std::string name = trim(stripped.substr(tab + 1));
    if (name.empty()) fail("empty class name");
    unsigned long id = 0;
    try {
      std::size_t pos = 0;
      id = std::stoul(id_text, &pos);
      if (pos != id_text.size()) throw std::invalid_argument(id_text);
    } catch (const std::exception&) {
      fail("'" + id_text + "' is not a label id");
    }
    if (id >= SegmentationMask::kUnlabeled) fail("label id out of range");
    if (!table.emplace(static_cast<std::uint16_t>(id), name).second) {
      fail("duplicate label id " + std::to_string(id));
    }
  }
  return table;
}

void write_name_table(const std::filesystem::path& path,
                      const std::map<std::uint16_t, std::string>& table) {
  std::ofstream out(path);
  if (!out) raise(Errc::kIoError, "cannot write '" + path.string() + "'");
  for (const auto& [id, name] : table) {
    out << id << '\t' << name << '\n';
  }
}

RgbImage read_rgb(const std::filesystem::path& path) {
  const PngImage png = read_png(path);
  if (png.bit_depth != 8) {
    raise(Errc::kBadFormat, "'" + path.string() + "' is not an 8-bit image");
  }
  RgbImage img;
  img.r = GridU8::Zero(png.height, png.width);
  img.g = GridU8::Zero(png.height, png.width);
  img.b = GridU8::Zero(png.height, png.width);
  for (int i = 0; i < png.height; ++i) {
    for (int j = 0; j < png.width; ++j) {
      if (png.channels == 3) {
        img.r(i, j) = static_cast<std::uint8_t>(png.at(i, j, 0));
        img.g(i, j) = static_cast<std::uint8_t>(png.at(i, j, 1));
        img.b(i, j) = static_cast<std::uint8_t>(png.at(i, j, 2));
      } else {
        const auto v = static_cast<std::uint8_t>(png.at(i, j, 0));
        img.r(i, j) = v;
        img.g(i, j) = v;
        img.b(i, j) = v;
      }
    }
  }
  return img;
}

void write_rgb(const std::filesystem::path& path, const RgbImage& img) {
  img.check();
  write_png_rgb8(path, img.r, img.g, img.b);
}

}  // namespace depeval
