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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rdp {

BinDistribution::BinDistribution(std::vector<double> probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.empty()) {
    throw std::invalid_argument("distribution: k must be >= 1");
  }
  double sum = 0.0;
  cumulative_.reserve(probabilities_.size());
  for (double p : probabilities_) {
    if (!(std::isfinite(p) && p >= 0)) {
      throw std::invalid_argument(
          "distribution: probabilities must be finite and >= 0");
    }
    sum += p;
    cumulative_.push_back(sum);
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("distribution: probabilities sum to " +
                                std::to_string(sum) + ", not 1");
  }
}

BinDistribution BinDistribution::UniformOn(int k, std::span<const int> cells) {
  if (k < 1 || cells.empty()) {
    throw std::invalid_argument("UniformOn: need k >= 1 and a nonempty cell set");
  }
  std::vector<double> p(k, 0.0);
  for (int c : cells) {
    if (c < 0 || c >= k) throw std::invalid_argument("UniformOn: cell out of range");
    p[c] += 1.0 / static_cast<double>(cells.size());
  }
  return BinDistribution(std::move(p));
}

int BinDistribution::Sample(RandomSource& rng) const {
  // Scale by the float total so the last cell with mass is reachable even
  // when the running sum stops just short of 1.
  const double u = rng.NextUniform() * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  int j = static_cast<int>(it - cumulative_.begin());
  if (j >= k()) j = k() - 1;
  // Never land on a zero-mass cell that shares a cumulative value.
  while (probabilities_[j] == 0.0 && j > 0) --j;
  return j;
}

BinnedDataset SampleDataset(const BinDistribution& p, int64_t n,
                            RandomSource& rng) {
  if (n < 1) throw std::invalid_argument("SampleDataset: n must be >= 1");
  std::vector<int> bins(static_cast<size_t>(n));
  for (auto& b : bins) b = p.Sample(rng);
  return BinnedDataset(std::move(bins), p.k());
}

BinnedDataset SampleSynthetic(const HistogramLattice& hist, int64_t count,
                              RandomSource& rng) {
  if (count < 1) throw std::invalid_argument("SampleSynthetic: N must be >= 1");
  std::vector<int64_t> cumulative(hist.k());
  int64_t running = 0;
  for (int j = 0; j < hist.k(); ++j) {
    running += hist.count(j);
    cumulative[j] = running;
  }
  std::vector<int> bins(static_cast<size_t>(count));
  for (auto& b : bins) {
    const auto u = static_cast<int64_t>(rng.NextBelow(hist.n()));
    b = static_cast<int>(
        std::upper_bound(cumulative.begin(), cumulative.end(), u) -
        cumulative.begin());
  }
  return BinnedDataset(std::move(bins), hist.k());
}

std::vector<int> SpreadCells(int k, int r) {
  if (k < 1 || r < 1 || r > k) {
    throw std::invalid_argument("SpreadCells: need 1 <= r <= k");
  }
  std::vector<int> cells(r);
  for (int i = 0; i < r; ++i) {
    cells[i] = static_cast<int>(static_cast<int64_t>(i) * k / r);
  }
  return cells;
}

HistogramLattice BalancedHistogram(int k, int r, int64_t n) {
  if (n < r) throw std::invalid_argument("BalancedHistogram: need n >= r");
  std::vector<int64_t> counts(k, 0);
  const std::vector<int> cells = SpreadCells(k, r);
  for (int i = 0; i < r; ++i) {
    counts[cells[i]] = n / r + (i < n % r ? 1 : 0);
  }
  return HistogramLattice(std::move(counts));
}

BinnedDataset DatasetOf(const HistogramLattice& hist) {
  std::vector<int> bins;
  bins.reserve(static_cast<size_t>(hist.n()));
  for (int j = 0; j < hist.k(); ++j) bins.insert(bins.end(), hist.count(j), j);
  return BinnedDataset(std::move(bins), hist.k());
}

}  // namespace rdp
