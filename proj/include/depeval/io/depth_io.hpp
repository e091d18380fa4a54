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

#include <filesystem>
#include <map>
#include <string>

#include "depeval/core/image.hpp"

namespace depeval {

// 16-bit grayscale PNG depth: meters = raw / scale_divisor, raw 0 = invalid.
DepthMap read_depth_png16(const std::filesystem::path& path, double scale_divisor = 256.0);
void write_depth_png16(const std::filesystem::path& path, const DepthMap& depth,
                       double scale_divisor = 256.0);

// Raw float container: magic "DEPTHF32", uint32 LE width and height, then
// row-major little-endian float32. NaN, negative, or infinite values mark
// invalid pixels; stored precision is float32.
DepthMap read_depth_f32(const std::filesystem::path& path);
void write_depth_f32(const std::filesystem::path& path, const DepthMap& depth);

// Label raster: single-channel 8- or 16-bit PNG; 16-bit value 65535 means
// unlabeled. Every other id must appear in the name table.
SegmentationMask read_labels_png(const std::filesystem::path& path,
                                 const std::map<std::uint16_t, std::string>& name_table);
void write_labels_png(const std::filesystem::path& path, const SegmentationMask& seg);

// Name table sidecar: one "id<TAB>name" per line, # comments allowed.
std::map<std::uint16_t, std::string> read_name_table(const std::filesystem::path& path);
void write_name_table(const std::filesystem::path& path,
                      const std::map<std::uint16_t, std::string>& table);

RgbImage read_rgb(const std::filesystem::path& path);
void write_rgb(const std::filesystem::path& path, const RgbImage& img);

}  // namespace depeval
