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

#include "rdp/sensitivity.h"

#include <cmath>
#include <numeric>
#include <string>

namespace rdp {

SensitivityProfile::SensitivityProfile(std::vector<double> values,
                                       EstimatorKind kind)
    : values_(std::move(values)), kind_(kind) {
  for (double v : values_) {
    if (!(std::isfinite(v) && v >= 0)) {
      throw std::invalid_argument(
          "sensitivity profile: h-values must be finite and >= 0");
    }
  }
  std::sort(values_.begin(), values_.end());
}

double SensitivityProfile::Cdf(double t) const {
  if (values_.empty()) return 0.0;
  const auto below = std::upper_bound(values_.begin(), values_.end(), t) -
                     values_.begin();
  return static_cast<double>(below) / static_cast<double>(values_.size());
}

double QuantileD(const SensitivityProfile& profile, double delta) {
  if (!(delta > 0 && delta < 1)) {
    throw std::invalid_argument("QuantileD: delta must lie in (0, 1)");
  }
  if (profile.size() == 0) throw std::invalid_argument("QuantileD: empty profile");
  // Smallest count c with c / m >= 1 - delta, i.e. m - c <= floor(delta m).
  // Working with delta * m avoids the rounding in (1 - delta) * m.
  const int64_t m = profile.size();
  const auto slack = static_cast<int64_t>(
      std::floor(delta * static_cast<double>(m)));
  const int64_t count = std::max<int64_t>(m - slack, 1);
  return profile.values()[count - 1];
}

double DkwBound(int64_t n, double epsilon) {
  if (n < 1) throw std::invalid_argument("DkwBound: n must be >= 1");
  if (!(epsilon >= 0)) throw std::invalid_argument("DkwBound: epsilon must be >= 0");
  return 2.0 * std::exp(-static_cast<double>(n) * epsilon * epsilon);
}

double QuantileCoverageBound(double delta, double delta_prime, int64_t pairs) {
  if (!(delta > 0 && delta < delta_prime && delta_prime < 1)) {
    throw std::invalid_argument(
        "QuantileCoverageBound: need 0 < delta < delta' < 1");
  }
  if (pairs < 1) throw std::invalid_argument("QuantileCoverageBound: pairs must be >= 1");
  const double gap = delta_prime - delta;
  return delta_prime + 2.0 * std::exp(-gap * gap * static_cast<double>(pairs));
}

double EtaOfBeta(double alpha, double beta) {
  if (!(alpha > 0 && beta > 0)) {
    throw std::invalid_argument("EtaOfBeta: alpha and beta must be > 0");
  }
  return std::exp(-alpha / (2.0 * beta));
}

double DefaultBeta(int64_t n, double c) {
  if (n < 1 || !(c > 0)) throw std::invalid_argument("DefaultBeta: need n >= 1, c > 0");
  return c / std::sqrt(static_cast<double>(n));
}

void QuantileConfig::Validate() const {
  if (!(delta > 0 && delta < delta_prime && delta_prime < 1)) {
    throw std::invalid_argument("quantile config: need 0 < delta < delta' < 1");
  }
  if (!(std::isfinite(beta) && beta > 0)) {
    throw std::invalid_argument("quantile config: beta must be > 0");
  }
}

QuantileConfig QuantileConfig::Calibrate(double gamma2, int64_t pairs,
                                         double beta) {
  if (!(gamma2 > 0 && gamma2 < 1)) {
    throw std::invalid_argument("calibration: gamma2 must lie in (0, 1)");
  }
  if (pairs < 1) throw std::invalid_argument("calibration: pairs must be >= 1");
  QuantileConfig config;
  config.delta_prime = gamma2 / 4.0;
  config.delta = config.delta_prime -
                 std::sqrt(std::log(8.0 / gamma2) / static_cast<double>(pairs));
  config.beta = beta;
  if (!(config.delta > 0)) {
    const double needed =
        std::log(8.0 / gamma2) / (config.delta_prime * config.delta_prime);
    throw std::invalid_argument(
        "n too small for requested gamma2=" + std::to_string(gamma2) + ": " +
        std::to_string(pairs) + " pairs available, more than " +
        std::to_string(static_cast<int64_t>(std::ceil(needed))) + " needed");
  }
  config.Validate();
  return config;
}

double CoverageFailureBound(const QuantileConfig& config, int64_t pairs) {
  return std::min(
      1.0, 2.0 * QuantileCoverageBound(config.delta, config.delta_prime, pairs));
}

ScalarRelease ReleaseWithProfile(double statistic,
                                 const SensitivityProfile& profile, int64_t n,
                                 const QuantileConfig& config, double alpha,
                                 double gamma1, RandomSource& rng) {
  config.Validate();
  if (!(std::isfinite(alpha) && alpha > 0)) {
    throw std::invalid_argument("release: alpha must be finite and > 0");
  }
  if (!(gamma1 >= 0 && gamma1 <= 1)) {
    throw std::invalid_argument("release: gamma1 must lie in [0, 1]");
  }
  if (!std::isfinite(statistic)) {
    throw std::invalid_argument("release: statistic is not finite");
  }
  // The coverage bound counts independent h-values; the u-statistic profile
  // uses the same floor(n/2) count.
  const int64_t pairs = std::max<int64_t>(n / 2, 1);
  const double gamma2 = CoverageFailureBound(config, pairs);

  ScalarRelease out;
  out.statistic = statistic;
  out.quantile = QuantileD(profile, config.delta);
  out.local_scale = out.quantile / static_cast<double>(n);
  out.budget = PrivacyBudget(2.0 * alpha, std::min(1.0, gamma1 + gamma2),
                             EtaOfBeta(alpha, config.beta));
  if (out.local_scale <= 0) {
    out.degenerate = true;
    out.value = statistic;
    return out;
  }
  out.noise_scale = out.local_scale / alpha;
  out.value = statistic + SampleLaplace(rng, LaplaceScale(out.noise_scale));
  return out;
}

double Mean(std::span<const double> data) {
  if (data.empty()) throw std::invalid_argument("Mean: empty sample");
  return std::accumulate(data.begin(), data.end(), 0.0) /
         static_cast<double>(data.size());
}

double TrimmedMean(std::span<const double> data, double trim) {
  if (data.empty()) throw std::invalid_argument("TrimmedMean: empty sample");
  if (!(trim >= 0 && trim < 0.5)) {
    throw std::invalid_argument("TrimmedMean: trim must lie in [0, 0.5)");
  }
  std::vector<double> sorted(data.begin(), data.end());
  std::sort(sorted.begin(), sorted.end());
  const auto cut = static_cast<size_t>(
      std::floor(trim * static_cast<double>(sorted.size())));
  return Mean(std::span<const double>(sorted).subspan(cut, sorted.size() - 2 * cut));
}

}  // namespace rdp
