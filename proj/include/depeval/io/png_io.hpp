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
#include <filesystem>
#include <vector>

#include "depeval/core/grid.hpp"

namespace depeval {

// Decoded PNG: palette expanded, alpha stripped, sub-byte depths widened to
// 8. Samples are channel-interleaved row-major, 8-bit values in 0..255.
struct PngImage {
  int width = 0;
  int height = 0;
  int bit_depth = 0;  // 8 or 16
  int channels = 0;   // 1 or 3
  std::vector<std::uint16_t> samples;

  std::uint16_t at(int row, int col, int channel) const {
    return samples[(static_cast<std::size_t>(row) * width + col) * channels + channel];
  }
};

PngImage read_png(const std::filesystem::path& path);

void write_png_gray16(const std::filesystem::path& path, const GridU16& gray);
void write_png_gray8(const std::filesystem::path& path, const GridU8& gray);
void write_png_rgb8(const std::filesystem::path& path, const GridU8& r, const GridU8& g,
                    const GridU8& b);

}  // namespace depeval
