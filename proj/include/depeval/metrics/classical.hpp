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
#include <map>
#include <string>

#include "depeval/core/image.hpp"

namespace depeval {

// Scalar metrics over the comparison domain. Pixels with gt <= 0 are
// excluded from the ratio metrics; pixels with gt <= 0 or pred <= 0 from
// the log and delta metrics. An empty effective domain raises EmptyDomain.
double mae(const DepthMap& pred, const DepthMap& gt, const GridB& domain);
double rmse(const DepthMap& pred, const DepthMap& gt, const GridB& domain);
double abs_rel(const DepthMap& pred, const DepthMap& gt, const GridB& domain);
double rel_sq(const DepthMap& pred, const DepthMap& gt, const GridB& domain);
double log_rmse(const DepthMap& pred, const DepthMap& gt, const GridB& domain);
double log10_err(const DepthMap& pred, const DepthMap& gt, const GridB& domain);
double silog(const DepthMap& pred, const DepthMap& gt, const GridB& domain);
double delta_k(const DepthMap& pred, const DepthMap& gt, const GridB& domain, int k);

// Sufficient statistics for one metric; mergeable for pixel-pooled
// aggregation across images.
struct MetricAcc {
  double s1 = 0.0;
  double s2 = 0.0;
  std::int64_t n = 0;

  void merge(const MetricAcc& other) {
    s1 += other.s1;
    s2 += other.s2;
    n += other.n;
  }
};

struct ClassicalAcc {
  MetricAcc mae, rmse, abs_rel, rel_sq, log_rmse, log10, silog;
  MetricAcc delta1, delta2, delta3;
  std::int64_t ratio_excluded = 0;  // domain pixels with gt <= 0
  std::int64_t log_excluded = 0;    // domain pixels with gt <= 0 or pred <= 0

  void merge(const ClassicalAcc& other);
};

ClassicalAcc classical_accumulate(const DepthMap& pred, const DepthMap& gt,
                                  const GridB& domain);

// Metric values keyed by name (mae, rmse, abs_rel, rel_sq, log_rmse, log10,
// silog, delta_1..delta_3). Metrics whose effective pixel count is zero are
// omitted; an all-empty accumulator raises EmptyDomain.
std::map<std::string, double> classical_finalize(const ClassicalAcc& acc);

}  // namespace depeval
