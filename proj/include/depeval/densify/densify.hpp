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

#include <set>
#include <string>

#include "depeval/core/image.hpp"

namespace depeval {

enum class DensifyMethod { kNearest, kLinear };

const char* densify_method_name(DensifyMethod method);
DensifyMethod parse_densify_method(const std::string& name);

// Fills every invalid pixel. Valid pixels pass through unchanged. nearest
// copies the Euclidean-nearest valid pixel; linear interpolates on a
// Delaunay triangulation of the valid pixels and falls back to nearest
// outside the hull (or everywhere when the valid pixels are collinear).
DepthMap densify(const DepthMap& sparse, DensifyMethod method);

// Invalidates pixels whose label is in sky_ids.
DepthMap mask_sky(const DepthMap& depth, const SegmentationMask& seg,
                  const std::set<std::uint16_t>& sky_ids);

}  // namespace depeval
