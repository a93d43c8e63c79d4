// Copyright 2026 The RDP Histogram Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "rdp/verify.h"

#include <cmath>
#include <numeric>
#include <vector>

#include "gtest/gtest.h"

namespace rdp {
namespace {

std::vector<int64_t> Counts(std::initializer_list<int64_t> c) { return c; }

TEST(ExactRatioBoundTest, DpNeighborsAtExactlyAlpha) {
  const HistogramLattice x(Counts({3, 2, 0}));
  const HistogramLattice y(Counts({2, 3, 0}));
  const RatioVerdict v = ExactRatioBound(Mechanism::kDp, x, y, 0.7, 0.2);
  EXPECT_TRUE(v.bounded);
  EXPECT_DOUBLE_EQ(v.max_log_ratio, 0.7);
  EXPECT_TRUE(v.witness.empty());
}

TEST(ExactRatioBoundTest, SameCellReplacementHasZeroRatio) {
  const HistogramLattice x(Counts({3, 2}));
  const RatioVerdict v = ExactRatioBound(Mechanism::kDp, x, x, 1.0, 0.2);
  EXPECT_TRUE(v.bounded);
  EXPECT_EQ(v.max_log_ratio, 0.0);
}

TEST(ExactRatioBoundTest, SparseMoveIntoEmptyCellIsUnbounded) {
  // n = 100, k = 5: 2k = 10 <= gamma n = 20.
  const HistogramLattice x(Counts({50, 50, 0, 0, 0}));
  const HistogramLattice y(Counts({49, 50, 0, 1, 0}));
  const RatioVerdict v = ExactRatioBound(Mechanism::kRdpSparse, x, y, 1.0, 0.2);
  EXPECT_FALSE(v.bounded);
  EXPECT_TRUE(std::isinf(v.max_log_ratio));
  EXPECT_NE(v.witness.find("cell 3"), std::string::npos);
  // The same pair is fine for the DP mechanism.
  EXPECT_TRUE(ExactRatioBound(Mechanism::kDp, x, y, 1.0, 0.2).bounded);
}

TEST(ExactRatioBoundTest, SparseMoveEmptyingACellIsUnbounded) {
  const HistogramLattice x(Counts({99, 1, 0, 0, 0}));
  const HistogramLattice y(Counts({100, 0, 0, 0, 0}));
  const RatioVerdict v = ExactRatioBound(Mechanism::kRdpSparse, x, y, 1.0, 0.2);
  EXPECT_FALSE(v.bounded);
  EXPECT_NE(v.witness.find("cell 1"), std::string::npos);
}

TEST(ExactRatioBoundTest, SparseMoveBetweenOccupiedCellsIsBounded) {
  const HistogramLattice x(Counts({50, 40, 10, 0, 0}));
  const HistogramLattice y(Counts({49, 41, 10, 0, 0}));
  const RatioVerdict v = ExactRatioBound(Mechanism::kRdpSparse, x, y, 1.0, 0.2);
  EXPECT_TRUE(v.bounded);
  EXPECT_DOUBLE_EQ(v.max_log_ratio, 1.0);
}

TEST(ExactRatioBoundTest, SparseFallbackBehavesLikeDp) {
  // n = 10, k = 5: 2k = 10 > gamma n = 2, so every cell is noisy.
  const HistogramLattice x(Counts({5, 5, 0, 0, 0}));
  const HistogramLattice y(Counts({4, 5, 1, 0, 0}));
  EXPECT_TRUE(ExactRatioBound(Mechanism::kRdpSparse, x, y, 1.0, 0.2).bounded);
}

TEST(ExactRatioBoundTest, RejectsNonNeighborsAndIdentity) {
  const HistogramLattice x(Counts({3, 2, 0}));
  EXPECT_THROW(ExactRatioBound(Mechanism::kDp, x, HistogramLattice(Counts({1, 2, 2})), 1, 0.2),
               std::invalid_argument);
  EXPECT_THROW(ExactRatioBound(Mechanism::kDp, x, HistogramLattice(Counts({3, 3, 0})), 1, 0.2),
               std::invalid_argument);
  EXPECT_THROW(ExactRatioBound(Mechanism::kIdentity, x, x, 1, 0.2), std::invalid_argument);
  EXPECT_THROW(ExactRatioBound(Mechanism::kDp, BinnedDataset({0, 1}, 2),
                               BinnedDataset({0, 1}, 3), 1, 0.2),
               std::invalid_argument);
}

TEST(ExactRatioBoundTest, SymmetricAndMatchesShiftOracle) {
  RandomSource rng(1);
  for (int t = 0; t < 2000; ++t) {
    const int k = 2 + static_cast<int>(rng.NextBelow(10));
    const int n = 1 + static_cast<int>(rng.NextBelow(100));
    const double alpha = 0.05 + rng.NextUniform();
    const double gamma = 0.05 + 0.95 * rng.NextUniform();
    std::vector<int> bins(n);
    for (int& b : bins) b = static_cast<int>(rng.NextBelow(k));
    std::vector<int> other = bins;
    other[rng.NextBelow(n)] = static_cast<int>(rng.NextBelow(k));
    const BinnedDataset x(bins, k), y(other, k);
    for (Mechanism m : {Mechanism::kDp, Mechanism::kRdpSparse}) {
      const RatioVerdict a = ExactRatioBound(m, x, y, alpha, gamma);
      const RatioVerdict b = ExactRatioBound(m, y, x, alpha, gamma);
      ASSERT_EQ(a.bounded, b.bounded);
      ASSERT_EQ(a.max_log_ratio, b.max_log_ratio);
      // Independent oracle: Laplace shift per noisy cell, and point masses
      // must sit on the same cells.
      const HistogramLattice hx = HistogramOf(x), hy = HistogramOf(y);
      const bool sparse = m == Mechanism::kRdpSparse && 2 * k <= gamma * n;
      const double s = 2.0 / (n * alpha);
      double expected = 0.0;
      for (int j = 0; j < k; ++j) {
        const bool zx = sparse && hx.count(j) == 0;
        const bool zy = sparse && hy.count(j) == 0;
        if (zx != zy) {
          expected = INFINITY;
          break;
        }
        if (!zx) expected += std::abs(hx.proportion(j) - hy.proportion(j)) / s;
      }
      if (std::isinf(expected)) {
        ASSERT_TRUE(std::isinf(a.max_log_ratio));
      } else {
        ASSERT_NEAR(a.max_log_ratio, expected, 1e-9);
      }
      ASSERT_EQ(a.bounded, a.max_log_ratio <= alpha);
    }
  }
}

TEST(WilsonIntervalTest, KnownValues) {
  const ProportionEstimate zero = WilsonInterval(0, 100);
  EXPECT_EQ(zero.estimate, 0.0);
  EXPECT_EQ(zero.lower, 0.0);
  EXPECT_NEAR(zero.upper, 0.03699, 1e-4);
  const ProportionEstimate half = WilsonInterval(50, 100);
  EXPECT_NEAR(half.lower, 0.4038, 1e-4);
  EXPECT_NEAR(half.upper, 0.5962, 1e-4);
  EXPECT_NEAR(half.half_width(), 0.0962, 1e-4);
  EXPECT_EQ(WilsonInterval(10, 10).upper, 1.0);
  EXPECT_THROW(WilsonInterval(11, 10), std::invalid_argument);
  EXPECT_THROW(WilsonInterval(0, 0), std::invalid_argument);
}

TEST(EstimateGammaTest, DpNeverFails) {
  const BinDistribution p = BinDistribution::UniformOn(25, SpreadCells(25, 2));
  const ProportionEstimate g =
      EstimateGamma(Mechanism::kDp, p, 500, 1.0, 0.2, 2000, RandomSource(1));
  EXPECT_EQ(g.successes, 0);
  EXPECT_EQ(g.estimate, 0.0);
}

TEST(EstimateGammaTest, SparseWithSupportOnOccupiedCellsNeverFails) {
  const BinDistribution p = BinDistribution::UniformOn(25, SpreadCells(25, 2));
  const ProportionEstimate g =
      EstimateGamma(Mechanism::kRdpSparse, p, 500, 1.0, 0.2, 2000, RandomSource(2));
  EXPECT_EQ(g.successes, 0);
}

TEST(EstimateGammaTest, SparseWithThinTailsStaysBelowCombinatorialBound) {
  std::vector<double> probs(25, 0.0);
  probs[0] = 0.495;
  probs[12] = 0.495;
  for (int j = 1; j <= 10; ++j) probs[j] = 0.001;
  const BinDistribution p(probs);
  const int64_t trials = 20000;
  const ProportionEstimate g =
      EstimateGamma(Mechanism::kRdpSparse, p, 500, 1.0, 0.2, trials, RandomSource(3));
  EXPECT_GT(g.successes, 0);
  EXPECT_LE(g.lower, 2.0 * 25 / 501.0);
  EXPECT_LE(g.estimate, 0.2);
}

TEST(EstimateGammaTest, FailureProbabilityMatchesExactFormula) {
  // k = 2, p = (1 - q, q), n = 40, gamma = 1: 2k = 4 <= 40. Fails iff the cell
  // of q-mass is empty in exactly one of X, X'. With m = n - 1 shared draws,
  // that is P(shared misses q) * 2 q (1 - q).
  const double q = 0.05;
  const int n = 40;
  const BinDistribution p({1.0 - q, q});
  const double exact = std::pow(1.0 - q, n - 1) * 2.0 * q * (1.0 - q);
  const int64_t trials = 100000;
  const ProportionEstimate g =
      EstimateGamma(Mechanism::kRdpSparse, p, n, 1.0, 1.0, trials, RandomSource(4));
  EXPECT_LE(g.lower, exact);
  EXPECT_GE(g.upper, exact);
}

TEST(EstimateGammaTest, ThreadCountDoesNotChangeResult) {
  std::vector<double> probs(10, 0.01);
  probs[0] = 0.91;
  const BinDistribution p(probs);
  const ProportionEstimate a =
      EstimateGamma(Mechanism::kRdpSparse, p, 100, 1.0, 0.2, 3000, RandomSource(5), 1);
  const ProportionEstimate b =
      EstimateGamma(Mechanism::kRdpSparse, p, 100, 1.0, 0.2, 3000, RandomSource(5), 8);
  EXPECT_EQ(a.successes, b.successes);
}

TEST(EstimateRiskTest, IdentityHasZeroRisk) {
  const RiskEstimate r = EstimateRisk(Mechanism::kIdentity, BalancedHistogram(10, 3, 100),
                                      RiskOptions{}, 50, RandomSource(1));
  EXPECT_EQ(r.mean_l1, 0.0);
  EXPECT_EQ(r.std_error, 0.0);
}

TEST(EstimateRiskTest, PreProjectionOracles) {
  const int k = 25, r = 2, n = 500;
  const HistogramLattice theta = BalancedHistogram(k, r, n);
  const RiskOptions raw{1.0, 0.2, Projection::kRaw};
  const RiskEstimate dp = EstimateRisk(Mechanism::kDp, theta, raw, 4000, RandomSource(2));
  const RiskEstimate sparse =
      EstimateRisk(Mechanism::kRdpSparse, theta, raw, 4000, RandomSource(3));
  EXPECT_NEAR(dp.mean_l1, 2.0 * k / n, 3 * dp.std_error);
  EXPECT_NEAR(sparse.mean_l1, 2.0 * r / n, 3 * sparse.std_error);
}

TEST(EstimateRiskTest, PerCoordinateSumsToMean) {
  const HistogramLattice theta = BalancedHistogram(20, 4, 200);
  for (Projection proj : {Projection::kRaw, Projection::kProjected}) {
    const RiskEstimate r = EstimateRisk(Mechanism::kDp, theta, {1.0, 0.2, proj}, 500,
                                        RandomSource(4));
    const double sum = std::accumulate(r.per_coordinate.begin(), r.per_coordinate.end(), 0.0);
    EXPECT_NEAR(sum, r.mean_l1, 1e-12);
    EXPECT_GE(r.mean_l1, 0.0);
    EXPECT_LE(r.mean_l1, 2.0);
  }
}

TEST(EstimateRiskTest, SparseZeroCellsContributeNothing) {
  const HistogramLattice theta = BalancedHistogram(25, 2, 500);
  const RiskEstimate r = EstimateRisk(Mechanism::kRdpSparse, theta, RiskOptions{}, 500,
                                      RandomSource(5));
  for (int j = 0; j < theta.k(); ++j) {
    if (theta.count(j) == 0) {
      EXPECT_EQ(r.per_coordinate[j], 0.0);
    }
  }
}

TEST(EstimateRiskTest, LossesMatchRiskAndIgnoreThreads) {
  const HistogramLattice theta = BalancedHistogram(30, 5, 300);
  const RiskOptions opts{};
  const auto one = SimulateLosses(Mechanism::kDp, theta, opts, 400, RandomSource(6), 1);
  const auto many = SimulateLosses(Mechanism::kDp, theta, opts, 400, RandomSource(6), 8);
  EXPECT_EQ(one, many);
  const RiskEstimate r = EstimateRisk(Mechanism::kDp, theta, opts, 400, RandomSource(6), 3);
  EXPECT_NEAR(std::accumulate(one.begin(), one.end(), 0.0) / 400, r.mean_l1, 1e-12);
}

TEST(RiskScalingSweepTest, DpRiskGrowsInK) {
  const std::vector<int> grid = {5, 10, 20, 40};
  const auto rows = RiskScalingSweep(Mechanism::kDp, SweepAxis::kBins, grid, 0, 1000,
                                     RiskOptions{}, 500, RandomSource(7));
  ASSERT_EQ(rows.size(), 4u);
  for (size_t i = 1; i < rows.size(); ++i) EXPECT_GT(rows[i].mean_risk, rows[i - 1].mean_risk);
  EXPECT_EQ(rows[2].param, 20.0);
}

TEST(RiskScalingSweepTest, SparseAtOneCellBeatsDp) {
  const std::vector<int> one = {1};
  const auto sparse = RiskScalingSweep(Mechanism::kRdpSparse, SweepAxis::kSupport, one,
                                       100, 1000, RiskOptions{}, 500, RandomSource(8));
  const std::vector<int> hundred = {100};
  const auto dp = RiskScalingSweep(Mechanism::kDp, SweepAxis::kSupport, hundred, 100,
                                   1000, RiskOptions{}, 500, RandomSource(8));
  EXPECT_LT(10 * sparse[0].mean_risk, dp[0].mean_risk);
}

TEST(EqualizerProbeTest, CoversThetaGrid) {
  const auto rows = EqualizerProbe(Mechanism::kDp, 10, RiskOptions{}, 200, RandomSource(9));
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows.front().param, 0.0);
  EXPECT_EQ(rows.back().param, 1.0);
  for (const auto& row : rows) EXPECT_GT(row.mean_risk, 0.0);
}

TEST(FitLineTest, ExactLine) {
  const std::vector<double> x = {1, 2, 3, 4}, y = {3, 5, 7, 9};
  const LinearFit f = FitLine(x, y);
  EXPECT_DOUBLE_EQ(f.slope, 2.0);
  EXPECT_DOUBLE_EQ(f.intercept, 1.0);
  EXPECT_DOUBLE_EQ(f.r_squared, 1.0);
  EXPECT_THROW(FitLine(std::vector<double>{1, 1}, std::vector<double>{1, 2}),
               std::invalid_argument);
}

}  // namespace
}  // namespace rdp
