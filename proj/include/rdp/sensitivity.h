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

// Release of a real statistic g_n with a data-dependent Laplace scale.
//
// For statistics whose worst-case change under replacing one record is
// n^-1 * sup h(x, x') for a symmetric pairwise function h, the scale is
// s_n(X) = d_delta(X) / n, where d_delta is an upper empirical quantile of
// h-values computed from the data itself:
//
//   split-pair   D(X, t) = (2/n) * #{ i <= n/2 : h(x_i, x_{i+n/2}) <= t }
//   u-statistic  U(X, t) = #{ i > j : h(x_i, x_j) <= t } / C(n, 2)
//
// The release draws g_n(X) + Laplace(s_n(X) / alpha) and claims the budget
// (2 alpha, eta = exp(-alpha / (2 beta)), gamma1 + gamma2). The claim follows
// from the quantile coverage bound (gamma2) and a user-supplied probability
// gamma1 that s_n(X) <= e^beta s_n(X') fails; it is an accounting statement,
// not a certificate. The verification layer checks both conditions by
// resampling.

#ifndef RDP_SENSITIVITY_H_
#define RDP_SENSITIVITY_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "rdp/mechanisms.h"
#include "rdp/random.h"
#include "rdp/types.h"

namespace rdp {

enum class EstimatorKind { kSplitPair, kUStatistic };

// Sorted h-values with step-function CDF and quantile queries.
class SensitivityProfile {
 public:
  // Values must be finite and >= 0; they are sorted here.
  SensitivityProfile(std::vector<double> values, EstimatorKind kind);

  EstimatorKind kind() const { return kind_; }
  std::span<const double> values() const { return values_; }
  int64_t size() const { return static_cast<int64_t>(values_.size()); }

  // Fraction of values <= t.
  double Cdf(double t) const;

 private:
  std::vector<double> values_;
  EstimatorKind kind_;
};

// h-values feeding the split-pair estimator: pairs (x_i, x_{i + n/2}) for
// i < floor(n/2). An odd trailing point is dropped.
template <typename Point, typename PairFn>
std::vector<double> SplitPairValues(std::span<const Point> data, PairFn&& h) {
  const size_t half = data.size() / 2;
  std::vector<double> values(half);
  for (size_t i = 0; i < half; ++i) values[i] = h(data[i], data[i + half]);
  return values;
}

template <typename Point, typename PairFn>
SensitivityProfile EmpiricalCdf(std::span<const Point> data, PairFn&& h,
                                EstimatorKind kind = EstimatorKind::kSplitPair) {
  if (data.size() < 2) {
    throw std::invalid_argument("EmpiricalCdf: need at least two points");
  }
  if (kind == EstimatorKind::kSplitPair) {
    return SensitivityProfile(SplitPairValues(data, h), kind);
  }
  std::vector<double> values;
  values.reserve(data.size() * (data.size() - 1) / 2);
  for (size_t i = 1; i < data.size(); ++i) {
    for (size_t j = 0; j < i; ++j) values.push_back(h(data[i], data[j]));
  }
  return SensitivityProfile(std::move(values), kind);
}

// Smallest sample value d with Cdf(d) >= 1 - delta. Throws for delta outside
// (0, 1) or an empty profile.
double QuantileD(const SensitivityProfile& profile, double delta);

// 2 exp(-n eps^2). Pass the number of independent h-values as n (for the
// split-pair estimator, floor(n / 2)). Throws for n < 1 or eps < 0.
double DkwBound(int64_t n, double epsilon);

// delta' + 2 exp(-(delta' - delta)^2 pairs): bound on P(h(x, x') > d_delta).
double QuantileCoverageBound(double delta, double delta_prime, int64_t pairs);

// exp(-alpha / (2 beta)).
double EtaOfBeta(double alpha, double beta);

// c / sqrt(n).
double DefaultBeta(int64_t n, double c = 1.0);

struct QuantileConfig {
  double delta = 0.01;
  double delta_prime = 0.05;
  double beta = 0.1;

  // Throws unless 0 < delta < delta_prime < 1 and beta > 0.
  void Validate() const;

  // Closed-form choice that makes each term of the coverage bound at most
  // gamma2 / 4: delta' = gamma2 / 4, delta = delta' - sqrt(ln(8 / gamma2) /
  // pairs). Throws when pairs is too small for delta to stay positive.
  static QuantileConfig Calibrate(double gamma2, int64_t pairs, double beta);
};

// Claimed gamma2: the coverage bound applied to X and to X' (union bound),
// capped at 1.
double CoverageFailureBound(const QuantileConfig& config, int64_t pairs);

struct ScalarRelease {
  double value = 0.0;       // released statistic
  double statistic = 0.0;   // g_n(data)
  double quantile = 0.0;    // d_delta(data)
  double local_scale = 0.0; // s_n = d_delta / n
  double noise_scale = 0.0; // s_n / alpha; 0 when degenerate
  bool degenerate = false;  // every h-value is 0; released without noise
  PrivacyBudget budget{1.0};
};

// Non-template core of the release, given the profile already built.
ScalarRelease ReleaseWithProfile(double statistic,
                                 const SensitivityProfile& profile, int64_t n,
                                 const QuantileConfig& config, double alpha,
                                 double gamma1, RandomSource& rng);

template <typename Point, typename Statistic, typename PairFn>
ScalarRelease RdpReleaseScalar(std::span<const Point> data, Statistic&& g,
                               PairFn&& h, const QuantileConfig& config,
                               double alpha, double gamma1, RandomSource& rng,
                               EstimatorKind kind = EstimatorKind::kSplitPair) {
  const SensitivityProfile profile = EmpiricalCdf(data, h, kind);
  return ReleaseWithProfile(g(data), profile,
                            static_cast<int64_t>(data.size()), config, alpha,
                            gamma1, rng);
}

// Built-in statistics and pairwise functions on real samples.
double Mean(std::span<const double> data);
// Mean after dropping floor(trim * n) points from each end; 0 <= trim < 0.5.
double TrimmedMean(std::span<const double> data, double trim);
inline double AbsDiff(double x, double y) { return x > y ? x - y : y - x; }

}  // namespace rdp

#endif  // RDP_SENSITIVITY_H_
