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
#include <limits>
#include <stdexcept>

#include "rdp/parallel.h"
#include "rdp/projection.h"

namespace rdp {

namespace {

constexpr double kZ95 = 1.959963984540054;

void CheckTrials(int64_t trials) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
}

// Sum of |c_j - c'_j|: 0 for identical histograms, 2 when one observation
// moved between cells.
int64_t CountDistance(const HistogramLattice& x,
                      const HistogramLattice& x_prime) {
  int64_t distance = 0;
  for (int j = 0; j < x.k(); ++j) {
    distance += std::abs(x.count(j) - x_prime.count(j));
  }
  return distance;
}

}  // namespace

RatioVerdict ExactRatioBound(Mechanism mechanism, const HistogramLattice& x,
                             const HistogramLattice& x_prime, double alpha,
                             double gamma) {
  if (mechanism == Mechanism::kIdentity) {
    throw std::invalid_argument("ExactRatioBound: identity has no ratio bound");
  }
  if (!(std::isfinite(alpha) && alpha > 0)) {
    throw std::invalid_argument("ExactRatioBound: alpha must be > 0");
  }
  if (x.k() != x_prime.k() || x.n() != x_prime.n()) {
    throw std::invalid_argument("ExactRatioBound: datasets differ in n or k");
  }
  const int64_t distance = CountDistance(x, x_prime);
  if (distance != 0 && distance != 2) {
    throw std::invalid_argument(
        "ExactRatioBound: datasets are not neighbors (differ in more than "
        "one observation)");
  }

  RatioVerdict verdict;
  const bool sparse = mechanism == Mechanism::kRdpSparse &&
                      SparseBranchActive(x.k(), x.n(), gamma);
  if (sparse) {
    for (int j = 0; j < x.k(); ++j) {
      const bool exact = x.count(j) == 0;
      const bool exact_prime = x_prime.count(j) == 0;
      if (exact != exact_prime) {
        verdict.bounded = false;
        verdict.max_log_ratio = std::numeric_limits<double>::infinity();
        verdict.witness = "cell " + std::to_string(j) +
                          (exact ? " exact-zero in X, noisy in X'"
                                 : " noisy in X, exact-zero in X'");
        return verdict;
      }
    }
  }
  // Cells with point masses coincide and carry equal mass, so only noisy
  // cells contribute. Each moved unit of count shifts a Laplace(2/(n alpha))
  // centre by 1/n, i.e. alpha/2 of log-ratio.
  verdict.max_log_ratio = static_cast<double>(distance) * alpha / 2.0;
  verdict.bounded = verdict.max_log_ratio <= alpha;
  if (!verdict.bounded) verdict.witness = "log-ratio exceeds alpha";
  return verdict;
}

RatioVerdict ExactRatioBound(Mechanism mechanism, const BinnedDataset& x,
                             const BinnedDataset& x_prime, double alpha,
                             double gamma) {
  if (x.k() != x_prime.k() || x.size() != x_prime.size()) {
    throw std::invalid_argument("ExactRatioBound: datasets differ in n or k");
  }
  return ExactRatioBound(mechanism, HistogramOf(x), HistogramOf(x_prime),
                         alpha, gamma);
}

ProportionEstimate WilsonInterval(int64_t successes, int64_t trials) {
  CheckTrials(trials);
  if (successes < 0 || successes > trials) {
    throw std::invalid_argument("WilsonInterval: successes out of range");
  }
  const double t = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / t;
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / t;
  const double center = (p + z2 / (2.0 * t)) / denom;
  const double half =
      kZ95 / denom * std::sqrt(p * (1.0 - p) / t + z2 / (4.0 * t * t));
  const double lower = successes == 0 ? 0.0 : std::max(0.0, center - half);
  const double upper = successes == trials ? 1.0 : std::min(1.0, center + half);
  return {p, lower, upper, successes, trials};
}

ProportionEstimate EstimateGamma(Mechanism mechanism, const BinDistribution& p,
                                 int64_t n, double alpha, double gamma,
                                 int64_t trials, const RandomSource& rng,
                                 int threads) {
  CheckTrials(trials);
  if (n < 1) throw std::invalid_argument("EstimateGamma: n must be >= 1");
  const int k = p.k();
  const auto failed = RunTrials(trials, threads, [&](int64_t trial) -> char {
    RandomSource stream = rng.Fork(static_cast<uint64_t>(trial));
    std::vector<int64_t> shared(k, 0);
    for (int64_t i = 0; i + 1 < n; ++i) ++shared[p.Sample(stream)];
    const int last = p.Sample(stream);    // X_n
    const int fresh = p.Sample(stream);   // X_{n+1}
    std::vector<int64_t> x = shared;
    std::vector<int64_t> x_prime = std::move(shared);
    ++x[last];
    ++x_prime[fresh];
    const RatioVerdict verdict =
        ExactRatioBound(mechanism, HistogramLattice(std::move(x)),
                        HistogramLattice(std::move(x_prime)), alpha, gamma);
    return verdict.bounded ? 0 : 1;
  });
  int64_t failures = 0;
  for (char f : failed) failures += f;
  return WilsonInterval(failures, trials);
}

std::vector<double> SimulateLosses(Mechanism mechanism,
                                   const HistogramLattice& theta,
                                   const RiskOptions& options, int64_t trials,
                                   const RandomSource& rng, int threads) {
  CheckTrials(trials);
  const HistogramReleaseParams params{options.alpha, options.gamma};
  return RunTrials(trials, threads, [&](int64_t trial) {
    RandomSource stream = rng.Fork(static_cast<uint64_t>(trial));
    const RealVector z = ReleaseRaw(mechanism, theta, params, stream);
    if (options.projection == Projection::kRaw) return L1Distance(z, theta);
    return L1Distance(L1Project(z, theta.n()), theta);
  });
}

RiskEstimate EstimateRisk(Mechanism mechanism, const HistogramLattice& theta,
                          const RiskOptions& options, int64_t trials,
                          const RandomSource& rng, int threads) {
  CheckTrials(trials);
  const HistogramReleaseParams params{options.alpha, options.gamma};
  const int k = theta.k();
  const auto per_trial = RunTrials(trials, threads, [&](int64_t trial) {
    RandomSource stream = rng.Fork(static_cast<uint64_t>(trial));
    const RealVector z = ReleaseRaw(mechanism, theta, params, stream);
    std::vector<double> errors(k);
    if (options.projection == Projection::kRaw) {
      for (int j = 0; j < k; ++j) errors[j] = std::abs(z[j] - theta.proportion(j));
    } else {
      const HistogramLattice out = L1Project(z, theta.n());
      for (int j = 0; j < k; ++j) {
        errors[j] = std::abs(out.proportion(j) - theta.proportion(j));
      }
    }
    return errors;
  });

  RiskEstimate risk;
  risk.trials = trials;
  risk.per_coordinate.assign(k, 0.0);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const auto& errors : per_trial) {
    double loss = 0.0;
    for (int j = 0; j < k; ++j) {
      loss += errors[j];
      risk.per_coordinate[j] += errors[j];
    }
    sum += loss;
    sum_sq += loss * loss;
  }
  const double t = static_cast<double>(trials);
  for (double& r : risk.per_coordinate) r /= t;
  risk.mean_l1 = sum / t;
  if (trials > 1) {
    const double variance =
        std::max(0.0, (sum_sq - sum * sum / t) / (t - 1.0));
    risk.std_error = std::sqrt(variance / t);
  }
  return risk;
}

std::vector<SweepRow> RiskScalingSweep(Mechanism mechanism, SweepAxis axis,
                                       std::span<const int> grid, int fixed_k,
                                       int64_t n, const RiskOptions& options,
                                       int64_t trials, const RandomSource& rng,
                                       int threads) {
  if (grid.empty()) throw std::invalid_argument("RiskScalingSweep: empty grid");
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    const int value = grid[i];
    const HistogramLattice theta = axis == SweepAxis::kBins
                                       ? BalancedHistogram(value, value, n)
                                       : BalancedHistogram(fixed_k, value, n);
    const RiskEstimate risk = EstimateRisk(mechanism, theta, options, trials,
                                           rng.Fork(i), threads);
    rows.push_back({static_cast<double>(value), risk.mean_l1, risk.std_error});
  }
  return rows;
}

std::vector<SweepRow> EqualizerProbe(Mechanism mechanism, int64_t n,
                                     const RiskOptions& options,
                                     int64_t trials, const RandomSource& rng,
                                     int threads) {
  if (n < 1) throw std::invalid_argument("EqualizerProbe: n must be >= 1");
  std::vector<SweepRow> rows;
  for (int64_t a = 0; a <= n; ++a) {
    const HistogramLattice theta({a, n - a});
    const RiskEstimate risk = EstimateRisk(mechanism, theta, options, trials,
                                           rng.Fork(static_cast<uint64_t>(a)),
                                           threads);
    rows.push_back({static_cast<double>(a) / static_cast<double>(n),
                    risk.mean_l1, risk.std_error});
  }
  return rows;
}

LinearFit FitLine(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("FitLine: need two equal-length series, size >= 2");
  }
  const double m = static_cast<double>(x.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= m;
  mean_y /= m;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mean_x) * (x[i] - mean_x);
    sxy += (x[i] - mean_x) * (y[i] - mean_y);
    syy += (y[i] - mean_y) * (y[i] - mean_y);
  }
  if (sxx == 0.0) throw std::invalid_argument("FitLine: x values are all equal");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

}  // namespace rdp
