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


#include "rdp/types.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gtest/gtest.h"
#include "rdp/random.h"

namespace rdp {
namespace {

TEST(BinnedDatasetTest, RejectsInvalidInput) {
  EXPECT_THROW(BinnedDataset({}, 3), std::invalid_argument);
  EXPECT_THROW(BinnedDataset({0}, 0), std::invalid_argument);
  EXPECT_THROW(BinnedDataset({0, 3}, 3), std::invalid_argument);
  EXPECT_THROW(BinnedDataset({-1}, 3), std::invalid_argument);
}

TEST(HistogramOfTest, CountsBins) {
  const HistogramLattice h = HistogramOf(BinnedDataset({0, 0, 1}, 2));
  EXPECT_EQ(std::vector<int64_t>(h.counts().begin(), h.counts().end()),
            (std::vector<int64_t>{2, 1}));
  EXPECT_EQ(h.n(), 3);
  const HistogramLattice single = HistogramOf(BinnedDataset({3}, 4));
  EXPECT_EQ(std::vector<int64_t>(single.counts().begin(), single.counts().end()),
            (std::vector<int64_t>{0, 0, 0, 1}));
}

TEST(HistogramOfTest, PermutationInvariant) {
  RandomSource rng(3);
  for (int t = 0; t < 200; ++t) {
    const int k = 1 + static_cast<int>(rng.NextBelow(10));
    const int n = 1 + static_cast<int>(rng.NextBelow(50));
    std::vector<int> bins(n);
    for (int& b : bins) b = static_cast<int>(rng.NextBelow(k));
    std::vector<int> shuffled = bins;
    for (int i = n - 1; i > 0; --i) {
      std::swap(shuffled[i], shuffled[rng.NextBelow(i + 1)]);
    }
    EXPECT_EQ(HistogramOf(BinnedDataset(bins, k)),
              HistogramOf(BinnedDataset(shuffled, k)));
  }
}

TEST(HistogramLatticeTest, ProportionsOnSimplex) {
  const HistogramLattice h({1, 0, 3});
  EXPECT_EQ(h.n(), 4);
  EXPECT_DOUBLE_EQ(h.proportion(0), 0.25);
  const auto p = h.proportions();
  EXPECT_DOUBLE_EQ(std::accumulate(p.begin(), p.end(), 0.0), 1.0);
  EXPECT_THROW(HistogramLattice({0, 0}), std::invalid_argument);
  EXPECT_THROW(HistogramLattice({2, -1}), std::invalid_argument);
  EXPECT_THROW(HistogramLattice({}), std::invalid_argument);
}

TEST(SupportSetTest, ReturnsEmptyCells) {
  EXPECT_EQ(SupportSet(BinnedDataset({0, 0, 1}, 4)), (std::vector<int>{2, 3}));
  EXPECT_TRUE(SupportSet(BinnedDataset({0, 1, 2}, 3)).empty());
}

TEST(SupportSetTest, MatchesZeroCounts) {
  RandomSource rng(4);
  for (int t = 0; t < 200; ++t) {
    const int k = 1 + static_cast<int>(rng.NextBelow(12));
    std::vector<int> bins(1 + rng.NextBelow(8));
    for (int& b : bins) b = static_cast<int>(rng.NextBelow(k));
    const BinnedDataset data(bins, k);
    const HistogramLattice h = HistogramOf(data);
    std::vector<int> zeros;
    for (int j = 0; j < k; ++j) {
      if (h.count(j) == 0) zeros.push_back(j);
    }
    EXPECT_EQ(SupportSet(data), zeros);
  }
}

TEST(RealVectorTest, RequiresFiniteEntries) {
  EXPECT_NO_THROW(RealVector({-0.5, 1.5}));
  EXPECT_THROW(RealVector({NAN}), std::invalid_argument);
  EXPECT_THROW(RealVector({INFINITY, 0.0}), std::invalid_argument);
}

TEST(PrivacyBudgetTest, Validation) {
  EXPECT_THROW(PrivacyBudget(0.0), std::invalid_argument);
  EXPECT_THROW(PrivacyBudget(1.0, 1.5), std::invalid_argument);
  EXPECT_THROW(PrivacyBudget(1.0, -0.1), std::invalid_argument);
  EXPECT_THROW(PrivacyBudget(1.0, 0.0, -1.0), std::invalid_argument);
  EXPECT_THROW(PrivacyBudget(1.0).Split(0), std::invalid_argument);
}

TEST(PrivacyBudgetTest, ComposeAddsParameters) {
  const PrivacyBudget half(0.5, 0.05);
  const PrivacyBudget both = Compose(half, half);
  EXPECT_EQ(both.alpha(), 1.0);
  EXPECT_EQ(both.gamma(), 0.10);
  EXPECT_EQ(both.eta(), 0.0);
  const PrivacyBudget mixed = Compose(PrivacyBudget(1.0, 0.2, 1e-6),
                                      PrivacyBudget(0.25, 0.1, 2e-6));
  EXPECT_DOUBLE_EQ(mixed.alpha(), 1.25);
  EXPECT_DOUBLE_EQ(mixed.gamma(), 0.3);
  EXPECT_DOUBLE_EQ(mixed.eta(), 3e-6);
}

TEST(PrivacyBudgetTest, GammaSaturatesAtOne) {
  const PrivacyBudget b = Compose(PrivacyBudget(1.0, 0.7), PrivacyBudget(1.0, 0.6));
  EXPECT_EQ(b.gamma(), 1.0);
  const PrivacyBudget same = Compose(PrivacyBudget(1.0, 0.7), PrivacyBudget(1.0, 0.7));
  EXPECT_EQ(same.gamma(), 1.0);
  EXPECT_EQ(same.alpha(), 2.0);
}

TEST(PrivacyBudgetTest, NearZeroIsNeutral) {
  const PrivacyBudget b(0.8, 0.1);
  const PrivacyBudget c = Compose(b, PrivacyBudget(1e-300, 0.0));
  EXPECT_EQ(c.alpha(), 0.8);
  EXPECT_EQ(c.gamma(), 0.1);
}

TEST(PrivacyBudgetTest, SplitDivides) {
  const PrivacyBudget half = PrivacyBudget(1.0, 0.1).Split(2);
  EXPECT_EQ(half.alpha(), 0.5);
  EXPECT_EQ(half.gamma(), 0.05);
  EXPECT_EQ(PrivacyBudget(0.3, 0.2, 1e-5).Split(1), PrivacyBudget(0.3, 0.2, 1e-5));
}

TEST(PrivacyBudgetTest, FourWaySplitComposesBack) {
  const PrivacyBudget total(1.0, 0.2);
  const PrivacyBudget quarter = total.Split(4);
  EXPECT_EQ(quarter.alpha(), 0.25);
  EXPECT_EQ(quarter.gamma(), 0.05);
  PrivacyBudget acc = quarter;
  for (int i = 1; i < 4; ++i) acc = Compose(acc, quarter);
  EXPECT_EQ(acc, total);
}

TEST(PrivacyBudgetTest, SplitComposeRoundTripExact) {
  RandomSource rng(12);
  for (int t = 0; t < 1000; ++t) {
    const PrivacyBudget b(1e-3 + 10 * rng.NextUniform(), rng.NextUniform(),
                          1e-3 * rng.NextUniform());
    const int m = 1 + static_cast<int>(rng.NextBelow(16));
    const PrivacyBudget part = b.Split(m);
    PrivacyBudget acc = part;
    for (int i = 1; i < m; ++i) acc = Compose(acc, part);
    ASSERT_EQ(acc, b) << "m=" << m << " alpha=" << b.alpha();
  }
}

TEST(PrivacyBudgetTest, ComposeCommutesAndAssociates) {
  RandomSource rng(13);
  auto random_budget = [&] {
    return PrivacyBudget(0.1 + rng.NextUniform(), 0.3 * rng.NextUniform(),
                         1e-4 * rng.NextUniform());
  };
  for (int t = 0; t < 500; ++t) {
    const PrivacyBudget a = random_budget(), b = random_budget(), c = random_budget();
    const PrivacyBudget ab = Compose(a, b), ba = Compose(b, a);
    EXPECT_EQ(ab.alpha(), ba.alpha());
    EXPECT_EQ(ab.gamma(), ba.gamma());
    EXPECT_EQ(ab.eta(), ba.eta());
    const PrivacyBudget left = Compose(Compose(a, b), c);
    const PrivacyBudget right = Compose(a, Compose(b, c));
    EXPECT_NEAR(left.alpha(), right.alpha(), 1e-12);
    EXPECT_NEAR(left.eta(), right.eta(), 1e-15);
    EXPECT_NEAR(left.gamma(), right.gamma(), 1e-12);
  }
}

}  // namespace
}  // namespace rdp
