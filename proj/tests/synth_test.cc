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


#include "rdp/synth.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"

namespace rdp {
namespace {

TEST(BinDistributionTest, Validation) {
  EXPECT_THROW(BinDistribution({}), std::invalid_argument);
  EXPECT_THROW(BinDistribution({0.5, 0.4}), std::invalid_argument);
  EXPECT_THROW(BinDistribution({1.5, -0.5}), std::invalid_argument);
  EXPECT_NO_THROW(BinDistribution({0.1, 0.2, 0.7}));
  const std::vector<int> bad = {5};
  EXPECT_THROW(BinDistribution::UniformOn(3, bad), std::invalid_argument);
}

TEST(SampleDatasetTest, PointMass) {
  std::vector<double> p(5, 0.0);
  p[3] = 1.0;
  RandomSource rng(1);
  const BinnedDataset data = SampleDataset(BinDistribution(p), 1000, rng);
  for (int b : data.bins()) ASSERT_EQ(b, 3);
  EXPECT_EQ(data.k(), 5);
}

TEST(SampleDatasetTest, NeverDrawsZeroMassCells) {
  const std::vector<double> p = {0.0, 0.5, 0.0, 0.0, 0.5, 0.0};
  RandomSource rng(2);
  const HistogramLattice h = HistogramOf(SampleDataset(BinDistribution(p), 100000, rng));
  for (int j : {0, 2, 3, 5}) EXPECT_EQ(h.count(j), 0);
}

TEST(SampleDatasetTest, ChiSquareGoodnessOfFit) {
  const std::vector<double> p = {0.1, 0.2, 0.3, 0.05, 0.35};
  RandomSource rng(3);
  const int n = 200000;
  const HistogramLattice h = HistogramOf(SampleDataset(BinDistribution(p), n, rng));
  double chi2 = 0;
  for (int j = 0; j < 5; ++j) {
    const double e = n * p[j];
    chi2 += (h.count(j) - e) * (h.count(j) - e) / e;
  }
  // 4 degrees of freedom; the 0.999 quantile is 18.47.
  EXPECT_LT(chi2, 18.47);
}

TEST(SampleSyntheticTest, PointMassHistogram) {
  RandomSource rng(4);
  const BinnedDataset data = SampleSynthetic(HistogramLattice({7, 0, 0}), 500, rng);
  for (int b : data.bins()) ASSERT_EQ(b, 0);
}

TEST(SampleSyntheticTest, FrequenciesConverge) {
  const HistogramLattice hist({10, 0, 25, 5, 60});
  RandomSource rng(5);
  const int m = 100000;
  const HistogramLattice draws = HistogramOf(SampleSynthetic(hist, m, rng));
  for (int j = 0; j < hist.k(); ++j) {
    const double p = hist.proportion(j);
    const double sd = std::sqrt(p * (1 - p) / m);
    EXPECT_NEAR(draws.proportion(j), p, 3 * sd + 1e-15) << "cell " << j;
  }
}

TEST(SpreadCellsTest, EvenSpacing) {
  EXPECT_EQ(SpreadCells(25, 2), (std::vector<int>{0, 12}));
  EXPECT_EQ(SpreadCells(10, 5), (std::vector<int>{0, 2, 4, 6, 8}));
  EXPECT_EQ(SpreadCells(4, 4), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_THROW(SpreadCells(3, 4), std::invalid_argument);
}

TEST(BalancedHistogramTest, SplitsCountsEvenly) {
  const HistogramLattice h = BalancedHistogram(10, 3, 100);
  EXPECT_EQ(h.n(), 100);
  EXPECT_EQ(h.count(0), 34);
  EXPECT_EQ(h.count(3), 33);
  EXPECT_EQ(h.count(6), 33);
  EXPECT_EQ(EmptyCells(h).size(), 7u);
}

TEST(DatasetOfTest, RoundTripsHistogram) {
  const HistogramLattice h({3, 0, 2});
  EXPECT_EQ(DatasetOf(h), BinnedDataset({0, 0, 0, 2, 2}, 3));
  EXPECT_EQ(HistogramOf(DatasetOf(h)), h);
}

}  // namespace
}  // namespace rdp
