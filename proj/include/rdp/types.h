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

// Value types shared by the mechanisms, the verification layer and the CLI.
// Every constructor validates its invariants and throws std::invalid_argument
// on violation, so a constructed object is always valid.

#ifndef RDP_TYPES_H_
#define RDP_TYPES_H_

#include <cstdint>
#include <span>
#include <vector>

namespace rdp {

// Observations x_1..x_n after partitioning the sample space into k cells;
// each observation is stored as its cell index.
class BinnedDataset {
 public:
  BinnedDataset(std::vector<int> bins, int k);

  int k() const { return k_; }
  int64_t size() const { return static_cast<int64_t>(bins_.size()); }
  std::span<const int> bins() const { return bins_; }
  int operator[](int64_t i) const { return bins_[i]; }

  friend bool operator==(const BinnedDataset&, const BinnedDataset&) = default;

 private:
  std::vector<int> bins_;
  int k_;
};

// A point of the lattice simplex: k nonnegative counts summing to n.
class HistogramLattice {
 public:
  explicit HistogramLattice(std::vector<int64_t> counts);

  int k() const { return static_cast<int>(counts_.size()); }
  int64_t n() const { return n_; }
  std::span<const int64_t> counts() const { return counts_; }
  int64_t count(int j) const { return counts_[j]; }
  double proportion(int j) const {
    return static_cast<double>(counts_[j]) / static_cast<double>(n_);
  }
  std::vector<double> proportions() const;

  friend bool operator==(const HistogramLattice&,
                         const HistogramLattice&) = default;

 private:
  std::vector<int64_t> counts_;
  int64_t n_;
};

// Unconstrained real k-vector (a noisy histogram before projection).
class RealVector {
 public:
  explicit RealVector(std::vector<double> values);

  int k() const { return static_cast<int>(values_.size()); }
  std::span<const double> values() const { return values_; }
  double operator[](int j) const { return values_[j]; }

  friend bool operator==(const RealVector&, const RealVector&) = default;

 private:
  std::vector<double> values_;
};

// Privacy parameters (alpha, gamma, eta). Pure alpha-DP is gamma = eta = 0.
//
// A budget obtained from Split() remembers the budget it was cut from, so
// composing all the pieces back together returns the original parameters
// bit for bit instead of accumulating floating-point error.
class PrivacyBudget {
 public:
  PrivacyBudget(double alpha, double gamma = 0.0, double eta = 0.0);

  double alpha() const;
  double gamma() const;
  double eta() const;

  // (alpha1 + alpha2, min(gamma1 + gamma2, 1), eta1 + eta2).
  PrivacyBudget Compose(const PrivacyBudget& other) const;
  // (alpha/m, gamma/m, eta/m). Throws for m < 1.
  PrivacyBudget Split(int m) const;

  friend bool operator==(const PrivacyBudget& a, const PrivacyBudget& b) {
    return a.alpha() == b.alpha() && a.gamma() == b.gamma() &&
           a.eta() == b.eta();
  }

 private:
  PrivacyBudget(double alpha, double gamma, double eta, int64_t num,
                int64_t den);
  bool SameWhole(const PrivacyBudget& other) const {
    return alpha_ == other.alpha_ && gamma_ == other.gamma_ &&
           eta_ == other.eta_;
  }

  // Parameters of the whole budget; this object holds num_/den_ of it.
  double alpha_;
  double gamma_;
  double eta_;
  int64_t num_ = 1;
  int64_t den_ = 1;
};

PrivacyBudget Compose(const PrivacyBudget& a, const PrivacyBudget& b);

HistogramLattice HistogramOf(const BinnedDataset& data);

// Indices of the empty cells, ascending.
std::vector<int> SupportSet(const BinnedDataset& data);
std::vector<int> EmptyCells(const HistogramLattice& hist);

}  // namespace rdp

#endif  // RDP_TYPES_H_
