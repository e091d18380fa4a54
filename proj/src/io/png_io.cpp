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

#include "depeval/io/png_io.hpp"

#include <png.h>

#include <cstdio>
#include <cstring>

#include "depeval/core/errors.hpp"

namespace depeval {

namespace {

struct FileHandle {
  FILE* f = nullptr;
  ~FileHandle() {
    if (f != nullptr) std::fclose(f);
  }
};

struct PngReader {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngReader() { png_destroy_read_struct(&png, &info, nullptr); }
};

struct PngWriter {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngWriter() { png_destroy_write_struct(&png, &info); }
};

}  // namespace

PngImage read_png(const std::filesystem::path& path) {
  FileHandle file;
  file.f = std::fopen(path.string().c_str(), "rb");
  if (file.f == nullptr) raise(Errc::kIoError, "cannot open '" + path.string() + "'");

  unsigned char signature[8];
  if (std::fread(signature, 1, 8, file.f) != 8 || png_sig_cmp(signature, 0, 8) != 0) {
    raise(Errc::kBadFormat, "'" + path.string() + "' is not a PNG file");
  }

  PngReader reader;
  reader.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (reader.png != nullptr) reader.info = png_create_info_struct(reader.png);
  if (reader.info == nullptr) raise(Errc::kIoError, "png allocation failed");
  if (setjmp(png_jmpbuf(reader.png))) {
    raise(Errc::kBadFormat, "failed to decode '" + path.string() + "'");
  }
  png_init_io(reader.png, file.f);
  png_set_sig_bytes(reader.png, 8);
  png_read_info(reader.png, reader.info);

  const png_byte color = png_get_color_type(reader.png, reader.info);
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(reader.png);
  if (color == PNG_COLOR_TYPE_GRAY && png_get_bit_depth(reader.png, reader.info) < 8) {
    png_set_expand_gray_1_2_4_to_8(reader.png);
  }
  if (png_get_valid(reader.png, reader.info, PNG_INFO_tRNS)) {
    png_set_tRNS_to_alpha(reader.png);
  }
  png_set_strip_alpha(reader.png);
  png_set_interlace_handling(reader.png);
  png_read_update_info(reader.png, reader.info);

  PngImage out;
  out.width = static_cast<int>(png_get_image_width(reader.png, reader.info));
  out.height = static_cast<int>(png_get_image_height(reader.png, reader.info));
  out.bit_depth = png_get_bit_depth(reader.png, reader.info);
  out.channels = png_get_channels(reader.png, reader.info);
  if (out.width <= 0 || out.height <= 0) {
    raise(Errc::kBadFormat, "'" + path.string() + "' has empty dimensions");
  }
  if (out.channels != 1 && out.channels != 3) {
    raise(Errc::kBadFormat, "'" + path.string() + "' has unsupported channel count " +
                                std::to_string(out.channels));
  }

  const std::size_t row_bytes = png_get_rowbytes(reader.png, reader.info);
  std::vector<std::vector<png_byte>> rows(out.height, std::vector<png_byte>(row_bytes));
  std::vector<png_bytep> row_ptrs(out.height);
  for (int i = 0; i < out.height; ++i) row_ptrs[i] = rows[i].data();
  png_read_image(reader.png, row_ptrs.data());
  png_read_end(reader.png, nullptr);

  out.samples.resize(static_cast<std::size_t>(out.width) * out.height * out.channels);
  const int values_per_row = out.width * out.channels;
  for (int i = 0; i < out.height; ++i) {
    const png_byte* row = rows[i].data();
    for (int k = 0; k < values_per_row; ++k) {
      // PNG stores 16-bit samples big endian.
      const std::uint16_t v =
          out.bit_depth == 16
              ? static_cast<std::uint16_t>((row[2 * k] << 8) | row[2 * k + 1])
              : row[k];
      out.samples[static_cast<std::size_t>(i) * values_per_row + k] = v;
    }
  }
  return out;
}

namespace {

void write_png(const std::filesystem::path& path, int width, int height, int bit_depth,
               int color_type, const std::vector<std::vector<png_byte>>& rows) {
  FileHandle file;
  file.f = std::fopen(path.string().c_str(), "wb");
  if (file.f == nullptr) raise(Errc::kIoError, "cannot write '" + path.string() + "'");

  PngWriter writer;
  writer.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (writer.png != nullptr) writer.info = png_create_info_struct(writer.png);
  if (writer.info == nullptr) raise(Errc::kIoError, "png allocation failed");
  if (setjmp(png_jmpbuf(writer.png))) {
    raise(Errc::kIoError, "failed to encode '" + path.string() + "'");
  }
  png_init_io(writer.png, file.f);
  png_set_IHDR(writer.png, writer.info, width, height, bit_depth, color_type,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(writer.png, writer.info);
  for (const auto& row : rows) {
    png_write_row(writer.png, const_cast<png_bytep>(row.data()));
  }
  png_write_end(writer.png, nullptr);
}

}  // namespace

void write_png_gray16(const std::filesystem::path& path, const GridU16& gray) {
  const int h = static_cast<int>(gray.rows());
  const int w = static_cast<int>(gray.cols());
  std::vector<std::vector<png_byte>> rows(h, std::vector<png_byte>(w * 2));
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) {
      rows[i][2 * j] = static_cast<png_byte>(gray(i, j) >> 8);
      rows[i][2 * j + 1] = static_cast<png_byte>(gray(i, j) & 0xFF);
    }
  }
  write_png(path, w, h, 16, PNG_COLOR_TYPE_GRAY, rows);
}

void write_png_gray8(const std::filesystem::path& path, const GridU8& gray) {
  const int h = static_cast<int>(gray.rows());
  const int w = static_cast<int>(gray.cols());
  std::vector<std::vector<png_byte>> rows(h, std::vector<png_byte>(w));
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) rows[i][j] = gray(i, j);
  }
  write_png(path, w, h, 8, PNG_COLOR_TYPE_GRAY, rows);
}

void write_png_rgb8(const std::filesystem::path& path, const GridU8& r, const GridU8& g,
                    const GridU8& b) {
  const int h = static_cast<int>(r.rows());
  const int w = static_cast<int>(r.cols());
  std::vector<std::vector<png_byte>> rows(h, std::vector<png_byte>(w * 3));
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) {
      rows[i][3 * j] = r(i, j);
      rows[i][3 * j + 1] = g(i, j);
      rows[i][3 * j + 2] = b(i, j);
    }
  }
  write_png(path, w, h, 8, PNG_COLOR_TYPE_RGB, rows);
}

}  // namespace depeval
