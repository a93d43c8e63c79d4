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

#include "rdp/projection.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace rdp {

namespace {

struct Candidate {
  double key;  // ordering value; smaller is better
  double z;    // raw coordinate, for ties when growing
  int index;
};

// top() is the smallest key; equal keys prefer larger z when `by_z` is set,
// then the lowest index.
struct Worse {
  bool by_z;
  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.key != b.key) return a.key > b.key;
    if (by_z && a.z != b.z) return a.z < b.z;
    return a.index > b.index;
  }
};

// Change in |t - c| when c grows by one, for residual t - c.
double GrowCost(double residual) {
  return std::clamp(1.0 - 2.0 * residual, -1.0, 1.0);
}

}  // namespace

HistogramLattice L1Project(const RealVector& z, int64_t n) {
  if (n < 1) throw std::invalid_argument("L1Project: n must be >= 1");
  const int k = z.k();
  const double scale = static_cast<double>(n);

  std::vector<double> target(k);
  std::vector<int64_t> counts(k);
  int64_t total = 0;
  for (int j = 0; j < k; ++j) {
    target[j] = scale * std::clamp(z[j], 0.0, 1.0);
    counts[j] = std::llround(target[j]);
    total += counts[j];
  }

  if (total < n) {
    std::priority_queue<Candidate, std::vector<Candidate>, Worse> queue(Worse{true});
    for (int j = 0; j < k; ++j) queue.push({GrowCost(target[j] - counts[j]), z[j], j});
    for (; total < n; ++total) {
      Candidate best = queue.top();
      queue.pop();
      ++counts[best.index];
      best.key = GrowCost(target[best.index] - counts[best.index]);
      queue.push(best);
    }
  } else if (total > n) {
    std::priority_queue<Candidate, std::vector<Candidate>, Worse> queue(Worse{false});
    for (int j = 0; j < k; ++j) {
      if (counts[j] > 0) queue.push({target[j] - counts[j], z[j], j});
    }
    for (; total > n; --total) {
      Candidate best = queue.top();
      queue.pop();
      --counts[best.index];
      best.key += 1.0;
      if (counts[best.index] > 0) queue.push(best);
    }
  }
  return HistogramLattice(std::move(counts));
}

double L1Distance(const RealVector& z, const HistogramLattice& hist) {
  if (z.k() != hist.k()) {
    throw std::invalid_argument("L1Distance: dimension mismatch");
  }
  double sum = 0.0;
  for (int j = 0; j < z.k(); ++j) sum += std::abs(z[j] - hist.proportion(j));
  return sum;
}

double L1Distance(const HistogramLattice& a, const HistogramLattice& b) {
  if (a.k() != b.k()) {
    throw std::invalid_argument("L1Distance: dimension mismatch");
  }
  double sum = 0.0;
  for (int j = 0; j < a.k(); ++j) {
    sum += std::abs(a.proportion(j) - b.proportion(j));
  }
  return sum;
}

}  // namespace rdp
