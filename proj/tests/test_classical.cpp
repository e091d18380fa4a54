#include <doctest.h>

#include <cmath>
#include <vector>

#include "depeval/metrics/classical.hpp"
#include "test_helpers.hpp"

using namespace depeval;
using testutil::Rng;

namespace {

// Naive reference: collect per-pixel terms into vectors, then reduce. No
// shared code with the library accumulation.
struct Reference {
  double mae = 0, rmse = 0, abs_rel = 0, rel_sq = 0;
  double log_rmse = 0, log10 = 0, silog = 0;
  double delta[3] = {0, 0, 0};
  std::int64_t n = 0, ratio_n = 0, log_n = 0;
  std::int64_t ratio_excluded = 0, log_excluded = 0;
};

Reference reference(const DepthMap& pred, const DepthMap& gt, const GridB& dom) {
  std::vector<double> diff, ratio_terms, sq_terms, logd, ratios;
  for (int i = 0; i < pred.height(); ++i) {
    for (int j = 0; j < pred.width(); ++j) {
      if (!dom(i, j)) continue;
      const double x = pred.values(i, j);
      const double y = gt.values(i, j);
      diff.push_back(x - y);
      if (y > 0) {
        ratio_terms.push_back(std::abs(x - y) / y);
        sq_terms.push_back((x - y) * (x - y) / y);
      }
      if (y > 0 && x > 0) {
        logd.push_back(std::log(x) - std::log(y));
        ratios.push_back(std::max(x / y, y / x));
      }
    }
  }
  Reference r;
  r.n = static_cast<std::int64_t>(diff.size());
  r.ratio_n = static_cast<std::int64_t>(ratio_terms.size());
  r.log_n = static_cast<std::int64_t>(logd.size());
  r.ratio_excluded = r.n - r.ratio_n;
  r.log_excluded = r.n - r.log_n;
  for (double d : diff) {
    r.mae += std::abs(d) / static_cast<double>(r.n);
    r.rmse += d * d / static_cast<double>(r.n);
  }
  r.rmse = std::sqrt(r.rmse);
  for (double t : ratio_terms) r.abs_rel += t / static_cast<double>(r.ratio_n);
  for (double t : sq_terms) r.rel_sq += t / static_cast<double>(r.ratio_n);
  double mean_log = 0;
  for (double d : logd) {
    r.log_rmse += d * d / static_cast<double>(r.log_n);
    r.log10 += std::abs(d) / std::log(10.0) / static_cast<double>(r.log_n);
    mean_log += d / static_cast<double>(r.log_n);
  }
  r.log_rmse = std::sqrt(r.log_rmse);
  double var = 0;
  for (double d : logd) {
    var += (d - mean_log) * (d - mean_log) / static_cast<double>(r.log_n);
  }
  r.silog = std::sqrt(var);
  for (double q : ratios) {
    for (int k = 0; k < 3; ++k) {
      if (q < std::pow(1.25, k + 1)) r.delta[k] += 1.0 / static_cast<double>(r.log_n);
    }
  }
  return r;
}

DepthMap noisy_pred(const DepthMap& gt, Rng& rng) {
  GridD values = gt.values;
  for (int i = 0; i < gt.height(); ++i) {
    for (int j = 0; j < gt.width(); ++j) {
      values(i, j) = std::max(0.0, values(i, j) + rng.gaussian(0.0, 2.0));
      if (rng.uniform() < 0.03) values(i, j) = 0.0;  // log exclusion path
    }
  }
  return make_dense_depth(std::move(values));
}

}  // namespace

TEST_CASE("metrics match the pixel-loop reference on random pairs") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    DepthMap gt = testutil::random_depth(rng, 16, 16, 0.0, 50.0);
    for (int i = 0; i < 16; ++i) {
      for (int j = 0; j < 16; ++j) {
        if (rng.uniform() < 0.05) gt.values(i, j) = 0.0;  // ratio exclusion path
      }
    }
    const DepthMap pred = noisy_pred(gt, rng);
    GridB dom(16, 16);
    for (int i = 0; i < 16; ++i) {
      for (int j = 0; j < 16; ++j) dom(i, j) = rng.uniform() < 0.9;
    }

    const Reference ref = reference(pred, gt, dom);
    const ClassicalAcc acc = classical_accumulate(pred, gt, dom);
    REQUIRE(acc.mae.n == ref.n);
    REQUIRE(acc.ratio_excluded == ref.ratio_excluded);
    REQUIRE(acc.log_excluded == ref.log_excluded);

    const auto got = classical_finalize(acc);
    const auto close = [](double a, double b) {
      return std::abs(a - b) <= 1e-10 * std::max({1.0, std::abs(a), std::abs(b)});
    };
    CHECK(close(got.at("mae"), ref.mae));
    CHECK(close(got.at("rmse"), ref.rmse));
    if (ref.ratio_n > 0) {
      CHECK(close(got.at("abs_rel"), ref.abs_rel));
      CHECK(close(got.at("rel_sq"), ref.rel_sq));
    }
    if (ref.log_n > 0) {
      CHECK(close(got.at("log_rmse"), ref.log_rmse));
      CHECK(close(got.at("log10"), ref.log10));
      CHECK(close(got.at("silog"), ref.silog));
      CHECK(close(got.at("delta_1"), ref.delta[0]));
      CHECK(close(got.at("delta_2"), ref.delta[1]));
      CHECK(close(got.at("delta_3"), ref.delta[2]));
    }
  }
}

TEST_CASE("identity prediction scores perfectly") {
  Rng rng(11);
  const DepthMap gt = testutil::random_depth(rng, 12, 9);
  const GridB dom = GridB::Constant(12, 9, true);
  CHECK(mae(gt, gt, dom) == 0.0);
  CHECK(rmse(gt, gt, dom) == 0.0);
  CHECK(abs_rel(gt, gt, dom) == 0.0);
  CHECK(rel_sq(gt, gt, dom) == 0.0);
  CHECK(log_rmse(gt, gt, dom) == 0.0);
  CHECK(log10_err(gt, gt, dom) == 0.0);
  CHECK(silog(gt, gt, dom) == 0.0);
  CHECK(delta_k(gt, gt, dom, 1) == 1.0);
  CHECK(delta_k(gt, gt, dom, 3) == 1.0);
}

TEST_CASE("hand-computed values on a 2-pixel fixture") {
  const DepthMap pred = testutil::dense({{2.0, 4.0}});
  const DepthMap gt = testutil::dense({{1.0, 2.0}});
  const GridB dom = GridB::Constant(1, 2, true);
  CHECK(mae(pred, gt, dom) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(rmse(pred, gt, dom) == doctest::Approx(std::sqrt(2.5)).epsilon(1e-12));
  CHECK(abs_rel(pred, gt, dom) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rel_sq(pred, gt, dom) == doctest::Approx(1.5).epsilon(1e-12));
  // both pixels are exactly a factor 2 off
  CHECK(log_rmse(pred, gt, dom) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(log10_err(pred, gt, dom) == doctest::Approx(std::log10(2.0)).epsilon(1e-12));
  CHECK(silog(pred, gt, dom) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(delta_k(pred, gt, dom, 1) == 0.0);
  CHECK(delta_k(pred, gt, dom, 3) == 0.0);
}

TEST_CASE("delta thresholds are strict") {
  // ratio exactly 1.25 must not count for delta_1 but must for delta_2
  const DepthMap gt = testutil::dense({{2.0, 4.0, 8.0}});
  const DepthMap pred = testutil::dense({{2.5, 5.0, 10.0}});
  const GridB dom = GridB::Constant(1, 3, true);
  CHECK(delta_k(pred, gt, dom, 1) == 0.0);
  CHECK(delta_k(pred, gt, dom, 2) == 1.0);
  CHECK(delta_k(pred, gt, dom, 3) == 1.0);
}

TEST_CASE("non-positive pixels are excluded per metric family") {
  const DepthMap pred = testutil::dense({{1.0, 0.0, 2.0}});
  const DepthMap gt = testutil::dense({{0.0, 3.0, 4.0}});
  const GridB dom = GridB::Constant(1, 3, true);
  const ClassicalAcc acc = classical_accumulate(pred, gt, dom);
  CHECK(acc.mae.n == 3);
  CHECK(acc.abs_rel.n == 2);   // gt 0 out
  CHECK(acc.log_rmse.n == 1);  // gt 0 and pred 0 out
  CHECK(acc.ratio_excluded == 1);
  CHECK(acc.log_excluded == 2);
  CHECK(mae(pred, gt, dom) == doctest::Approx((1.0 + 3.0 + 2.0) / 3.0));
  CHECK(abs_rel(pred, gt, dom) == doctest::Approx((3.0 / 3.0 + 2.0 / 4.0) / 2.0));
  CHECK(delta_k(pred, gt, dom, 1) == 0.0);  // only the 2-vs-4 pixel qualifies
}

TEST_CASE("all-excluded metrics disappear from the finalized map") {
  const DepthMap pred = testutil::dense({{1.0, 2.0}});
  const DepthMap gt = testutil::dense({{0.0, 0.0}});
  const GridB dom = GridB::Constant(1, 2, true);
  const auto out = classical_finalize(classical_accumulate(pred, gt, dom));
  CHECK(out.count("mae") == 1);
  CHECK(out.count("rmse") == 1);
  CHECK(out.count("abs_rel") == 0);
  CHECK(out.count("delta_1") == 0);
  CHECK_THROWS_AS(abs_rel(pred, gt, dom), Error);
}

TEST_CASE("empty domain raises") {
  const DepthMap gt = testutil::dense({{1.0, 2.0}});
  const GridB dom = GridB::Constant(1, 2, false);
  CHECK_THROWS_AS(mae(gt, gt, dom), Error);
  CHECK_THROWS_AS(classical_finalize(classical_accumulate(gt, gt, dom)), Error);
}

TEST_CASE("merging row-split accumulators equals one pass") {
  Rng rng(23);
  const DepthMap gt = testutil::random_depth(rng, 14, 10);
  const DepthMap pred = noisy_pred(gt, rng);
  const GridB all = GridB::Constant(14, 10, true);
  GridB top = all, bottom = all;
  for (int i = 0; i < 14; ++i) {
    for (int j = 0; j < 10; ++j) (i < 7 ? bottom : top)(i, j) = false;
  }
  ClassicalAcc merged = classical_accumulate(pred, gt, top);
  merged.merge(classical_accumulate(pred, gt, bottom));
  const ClassicalAcc whole = classical_accumulate(pred, gt, all);
  CHECK(merged.mae.n == whole.mae.n);
  CHECK(merged.log_excluded == whole.log_excluded);
  // merging regroups the additions, so allow rounding noise
  CHECK(merged.mae.s1 == doctest::Approx(whole.mae.s1).epsilon(1e-13));
  CHECK(merged.rmse.s2 == doctest::Approx(whole.rmse.s2).epsilon(1e-13));
  const auto a = classical_finalize(merged);
  const auto b = classical_finalize(whole);
  REQUIRE(a.size() == b.size());
  for (const auto& [name, value] : a) {
    CHECK(value == doctest::Approx(b.at(name)).epsilon(1e-12));
  }
}

TEST_CASE("mae and the log family are symmetric in their arguments") {
  Rng rng(31);
  const DepthMap a = testutil::random_depth(rng, 8, 8, 1.0, 40.0);
  const DepthMap b = testutil::random_depth(rng, 8, 8, 1.0, 40.0);
  const GridB dom = GridB::Constant(8, 8, true);
  CHECK(mae(a, b, dom) == mae(b, a, dom));
  CHECK(rmse(a, b, dom) == rmse(b, a, dom));
  CHECK(log_rmse(a, b, dom) == doctest::Approx(log_rmse(b, a, dom)).epsilon(1e-14));
  CHECK(silog(a, b, dom) == doctest::Approx(silog(b, a, dom)).epsilon(1e-12));
  CHECK(delta_k(a, b, dom, 2) == delta_k(b, a, dom, 2));
}

TEST_CASE("joint rescaling: linear metrics scale, log metrics hold") {
  Rng rng(37);
  const DepthMap gt = testutil::random_depth(rng, 8, 8, 1.0, 40.0);
  const DepthMap pred = noisy_pred(gt, rng);
  const GridB dom = GridB::Constant(8, 8, true);
  const double s = 3.5;
  const DepthMap gt_s = make_depth(gt.values * s, gt.valid);
  const DepthMap pred_s = make_depth(pred.values * s, pred.valid);
  CHECK(mae(pred_s, gt_s, dom) == doctest::Approx(s * mae(pred, gt, dom)).epsilon(1e-12));
  CHECK(rmse(pred_s, gt_s, dom) == doctest::Approx(s * rmse(pred, gt, dom)).epsilon(1e-12));
  CHECK(rel_sq(pred_s, gt_s, dom) ==
        doctest::Approx(s * rel_sq(pred, gt, dom)).epsilon(1e-12));
  CHECK(abs_rel(pred_s, gt_s, dom) == doctest::Approx(abs_rel(pred, gt, dom)).epsilon(1e-12));
  CHECK(log_rmse(pred_s, gt_s, dom) ==
        doctest::Approx(log_rmse(pred, gt, dom)).epsilon(1e-12));
  CHECK(delta_k(pred_s, gt_s, dom, 1) == delta_k(pred, gt, dom, 1));
}

TEST_CASE("delta is monotone in k") {
  Rng rng(41);
  const DepthMap gt = testutil::random_depth(rng, 10, 10, 1.0, 30.0);
  const DepthMap pred = noisy_pred(gt, rng);
  const GridB dom = GridB::Constant(10, 10, true);
  const double d1 = delta_k(pred, gt, dom, 1);
  const double d2 = delta_k(pred, gt, dom, 2);
  const double d3 = delta_k(pred, gt, dom, 3);
  CHECK(d1 <= d2);
  CHECK(d2 <= d3);
}
