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

#include "depeval/metrics/classical.hpp"

#include <cmath>

namespace depeval {

namespace {

void check_inputs(const DepthMap& pred, const DepthMap& gt, const GridB& domain) {
  if (!same_shape(pred.values, gt.values) || !same_shape(pred.values, domain)) {
    raise(Errc::kDimensionMismatch, "metric inputs differ in shape");
  }
}

double finalize_mean(const MetricAcc& acc) { return acc.s1 / static_cast<double>(acc.n); }

double finalize_rms(const MetricAcc& acc) {
  return std::sqrt(acc.s2 / static_cast<double>(acc.n));
}

double finalize_silog(const MetricAcc& acc) {
  const double n = static_cast<double>(acc.n);
  const double mean = acc.s1 / n;
  const double var = acc.s2 / n - mean * mean;
  return std::sqrt(std::max(var, 0.0));  // rounding can push var slightly below 0
}

double require(const MetricAcc& acc, double (*finalize)(const MetricAcc&),
               const char* name) {
  if (acc.n == 0) raise(Errc::kEmptyDomain, std::string(name) + " has no usable pixel");
  return finalize(acc);
}

}  // namespace

void ClassicalAcc::merge(const ClassicalAcc& other) {
  mae.merge(other.mae);
  rmse.merge(other.rmse);
  abs_rel.merge(other.abs_rel);
  rel_sq.merge(other.rel_sq);
  log_rmse.merge(other.log_rmse);
  log10.merge(other.log10);
  silog.merge(other.silog);
  delta1.merge(other.delta1);
  delta2.merge(other.delta2);
  delta3.merge(other.delta3);
  ratio_excluded += other.ratio_excluded;
  log_excluded += other.log_excluded;
}

ClassicalAcc classical_accumulate(const DepthMap& pred, const DepthMap& gt,
                                  const GridB& domain) {
  check_inputs(pred, gt, domain);
  ClassicalAcc acc;
  const double d1 = 1.25;
  const double d2 = d1 * d1;
  const double d3 = d2 * d1;
  for (Eigen::Index i = 0; i < domain.rows(); ++i) {
    for (Eigen::Index j = 0; j < domain.cols(); ++j) {
      if (!domain(i, j)) continue;
      const double x = pred.values(i, j);
      const double y = gt.values(i, j);
      const double d = x - y;
      acc.mae.s1 += std::abs(d);
      acc.mae.n += 1;
      acc.rmse.s2 += d * d;
      acc.rmse.n += 1;
      if (y > 0.0) {
        acc.abs_rel.s1 += std::abs(d) / y;
        acc.abs_rel.n += 1;
        acc.rel_sq.s1 += d * d / y;
        acc.rel_sq.n += 1;
      } else {
        acc.ratio_excluded += 1;
      }
      if (y > 0.0 && x > 0.0) {
        const double dl = std::log(x) - std::log(y);
        acc.log_rmse.s2 += dl * dl;
        acc.log_rmse.n += 1;
        acc.log10.s1 += std::abs(dl) / std::log(10.0);
        acc.log10.n += 1;
        acc.silog.s1 += dl;
        acc.silog.s2 += dl * dl;
        acc.silog.n += 1;
        const double ratio = std::max(x / y, y / x);
        acc.delta1.s1 += ratio < d1 ? 1.0 : 0.0;
        acc.delta1.n += 1;
        acc.delta2.s1 += ratio < d2 ? 1.0 : 0.0;
        acc.delta2.n += 1;
        acc.delta3.s1 += ratio < d3 ? 1.0 : 0.0;
        acc.delta3.n += 1;
      } else {
        acc.log_excluded += 1;
      }
    }
  }
  return acc;
}

std::map<std::string, double> classical_finalize(const ClassicalAcc& acc) {
  if (acc.mae.n == 0) raise(Errc::kEmptyDomain, "no pixel in the comparison domain");
  std::map<std::string, double> out;
  out["mae"] = finalize_mean(acc.mae);
  out["rmse"] = finalize_rms(acc.rmse);
  if (acc.abs_rel.n > 0) out["abs_rel"] = finalize_mean(acc.abs_rel);
  if (acc.rel_sq.n > 0) out["rel_sq"] = finalize_mean(acc.rel_sq);
  if (acc.log_rmse.n > 0) out["log_rmse"] = finalize_rms(acc.log_rmse);
  if (acc.log10.n > 0) out["log10"] = finalize_mean(acc.log10);
  if (acc.silog.n > 0) out["silog"] = finalize_silog(acc.silog);
  if (acc.delta1.n > 0) out["delta_1"] = finalize_mean(acc.delta1);
  if (acc.delta2.n > 0) out["delta_2"] = finalize_mean(acc.delta2);
  if (acc.delta3.n > 0) out["delta_3"] = finalize_mean(acc.delta3);
  return out;
}

double mae(const DepthMap& pred, const DepthMap& gt, const GridB& domain) {
  return require(classical_accumulate(pred, gt, domain).mae, finalize_mean, "mae");
}

double rmse(const DepthMap& pred, const DepthMap& gt, const GridB& domain) {
  return require(classical_accumulate(pred, gt, domain).rmse, finalize_rms, "rmse");
}

double abs_rel(const DepthMap& pred, const DepthMap& gt, const GridB& domain) {
  return require(classical_accumulate(pred, gt, domain).abs_rel, finalize_mean, "abs_rel");
}

double rel_sq(const DepthMap& pred, const DepthMap& gt, const GridB& domain) {
  return require(classical_accumulate(pred, gt, domain).rel_sq, finalize_mean, "rel_sq");
}

double log_rmse(const DepthMap& pred, const DepthMap& gt, const GridB& domain) {
  return require(classical_accumulate(pred, gt, domain).log_rmse, finalize_rms, "log_rmse");
}

double log10_err(const DepthMap& pred, const DepthMap& gt, const GridB& domain) {
  return require(classical_accumulate(pred, gt, domain).log10, finalize_mean, "log10");
}

double silog(const DepthMap& pred, const DepthMap& gt, const GridB& domain) {
  return require(classical_accumulate(pred, gt, domain).silog, finalize_silog, "silog");
}

double delta_k(const DepthMap& pred, const DepthMap& gt, const GridB& domain, int k) {
  if (k < 1 || k > 3) raise(Errc::kBadConfig, "delta exponent must be 1, 2, or 3");
  const ClassicalAcc acc = classical_accumulate(pred, gt, domain);
  const MetricAcc& m = k == 1 ? acc.delta1 : (k == 2 ? acc.delta2 : acc.delta3);
  return require(m, finalize_mean, "delta");
}

}  // namespace depeval
