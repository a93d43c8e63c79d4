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
#include <stdexcept>
#include <string>

namespace rdp {

BinnedDataset::BinnedDataset(std::vector<int> bins, int k)
    : bins_(std::move(bins)), k_(k) {
  if (k_ < 1) throw std::invalid_argument("dataset: k must be >= 1");
  if (bins_.empty()) {
    throw std::invalid_argument("dataset: need at least one observation");
  }
  for (size_t i = 0; i < bins_.size(); ++i) {
    if (bins_[i] < 0 || bins_[i] >= k_) {
      throw std::invalid_argument("dataset: bin index " +
                                  std::to_string(bins_[i]) + " at position " +
                                  std::to_string(i) + " outside [0, " +
                                  std::to_string(k_) + ")");
    }
  }
}

HistogramLattice::HistogramLattice(std::vector<int64_t> counts)
    : counts_(std::move(counts)), n_(0) {
  if (counts_.empty()) throw std::invalid_argument("histogram: k must be >= 1");
  for (int64_t c : counts_) {
    if (c < 0) throw std::invalid_argument("histogram: negative count");
    n_ += c;
  }
  if (n_ < 1) throw std::invalid_argument("histogram: total count must be >= 1");
}

std::vector<double> HistogramLattice::proportions() const {
  std::vector<double> out(counts_.size());
  for (int j = 0; j < k(); ++j) out[j] = proportion(j);
  return out;
}

RealVector::RealVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("vector: k must be >= 1");
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("vector: entries must be finite");
    }
  }
}

PrivacyBudget::PrivacyBudget(double alpha, double gamma, double eta)
    : PrivacyBudget(alpha, gamma, eta, 1, 1) {}

PrivacyBudget::PrivacyBudget(double alpha, double gamma, double eta,
                             int64_t num, int64_t den)
    : alpha_(alpha), gamma_(gamma), eta_(eta), num_(num), den_(den) {
  if (!(std::isfinite(alpha) && alpha > 0)) {
    throw std::invalid_argument("budget: alpha must be finite and > 0");
  }
  if (!(gamma >= 0 && gamma <= 1)) {
    throw std::invalid_argument("budget: gamma must lie in [0, 1]");
  }
  if (!(std::isfinite(eta) && eta >= 0)) {
    throw std::invalid_argument("budget: eta must be finite and >= 0");
  }
}

double PrivacyBudget::alpha() const {
  return num_ == den_ ? alpha_ : alpha_ * static_cast<double>(num_) /
                                     static_cast<double>(den_);
}

double PrivacyBudget::gamma() const {
  if (num_ == den_) return gamma_;
  return std::min(1.0, gamma_ * static_cast<double>(num_) /
                           static_cast<double>(den_));
}

double PrivacyBudget::eta() const {
  return num_ == den_ ? eta_ : eta_ * static_cast<double>(num_) /
                                   static_cast<double>(den_);
}

PrivacyBudget PrivacyBudget::Compose(const PrivacyBudget& other) const {
  constexpr int64_t kMaxDen = int64_t{1} << 30;
  if (SameWhole(other) && den_ <= kMaxDen && other.den_ <= kMaxDen) {
    int64_t num = num_ * other.den_ + other.num_ * den_;
    int64_t den = den_ * other.den_;
    const int64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (den <= kMaxDen) return PrivacyBudget(alpha_, gamma_, eta_, num, den);
  }
  return PrivacyBudget(alpha() + other.alpha(),
                       std::min(gamma() + other.gamma(), 1.0),
                       eta() + other.eta());
}

PrivacyBudget PrivacyBudget::Split(int m) const {
  if (m < 1) throw std::invalid_argument("budget: split count must be >= 1");
  if (m == 1) return *this;
  if (den_ <= (int64_t{1} << 30) / m) {
    int64_t num = num_;
    int64_t den = den_ * m;
    const int64_t g = std::gcd(num, den);
    return PrivacyBudget(alpha_, gamma_, eta_, num / g, den / g);
  }
  return PrivacyBudget(alpha() / m, gamma() / m, eta() / m);
}

PrivacyBudget Compose(const PrivacyBudget& a, const PrivacyBudget& b) {
  return a.Compose(b);
}

HistogramLattice HistogramOf(const BinnedDataset& data) {
  std::vector<int64_t> counts(data.k(), 0);
  for (int b : data.bins()) ++counts[b];
  return HistogramLattice(std::move(counts));
}

std::vector<int> EmptyCells(const HistogramLattice& hist) {
  std::vector<int> out;
  for (int j = 0; j < hist.k(); ++j) {
    if (hist.count(j) == 0) out.push_back(j);
  }
  return out;
}

std::vector<int> SupportSet(const BinnedDataset& data) {
  return EmptyCells(HistogramOf(data));
}

}  // namespace rdp
