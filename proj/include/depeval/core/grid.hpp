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

#include <Eigen/Dense>
#include <cstdint>

namespace depeval {

// All rasters are height x width arrays stored row-major, matching the file formats.
template <class Scalar>
using Grid = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using GridD = Grid<double>;
using GridB = Grid<bool>;
using GridU8 = Grid<std::uint8_t>;
using GridU16 = Grid<std::uint16_t>;
using GridI64 = Grid<std::int64_t>;

template <class Derived>
bool same_shape(const Eigen::ArrayBase<Derived>& a, Eigen::Index rows, Eigen::Index cols) {
  return a.rows() == rows && a.cols() == cols;
}

template <class DerivedA, class DerivedB>
bool same_shape(const Eigen::ArrayBase<DerivedA>& a, const Eigen::ArrayBase<DerivedB>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols();
}

}  // namespace depeval
