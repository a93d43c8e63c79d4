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

#ifndef RDP_SYNTH_H_
#define RDP_SYNTH_H_

#include <cstdint>
#include <span>
#include <vector>

#include "rdp/random.h"
#include "rdp/types.h"

namespace rdp {

// A categorical distribution over k cells.
class BinDistribution {
 public:
  // Probabilities must be finite, nonnegative and sum to 1 within 1e-12.
  explicit BinDistribution(std::vector<double> probabilities);

  // Equal mass on each listed cell, zero elsewhere.
  static BinDistribution UniformOn(int k, std::span<const int> cells);

  int k() const { return static_cast<int>(probabilities_.size()); }
  std::span<const double> probabilities() const { return probabilities_; }

  int Sample(RandomSource& rng) const;

 private:
  std::vector<double> probabilities_;
  std::vector<double> cumulative_;
};

// n iid draws from p.
BinnedDataset SampleDataset(const BinDistribution& p, int64_t n,
                            RandomSource& rng);

// N iid draws from the normalized histogram counts / n. Draws a uniform
// integer in [0, n) and inverts the integer cumulative counts, so the
// sampling probabilities are exactly counts_j / n.
BinnedDataset SampleSynthetic(const HistogramLattice& hist, int64_t count,
                              RandomSource& rng);

// r cells spread evenly over [0, k): cell i * k / r for i < r.
std::vector<int> SpreadCells(int k, int r);

// A histogram on k cells with n observations split as evenly as possible over
// SpreadCells(k, r). Requires 1 <= r <= k and n >= r.
HistogramLattice BalancedHistogram(int k, int r, int64_t n);

// The dataset whose histogram is `hist`, observations sorted by cell.
BinnedDataset DatasetOf(const HistogramLattice& hist);

}  // namespace rdp

#endif  // RDP_SYNTH_H_
