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

// Verification of the histogram mechanisms: an exact decision of the
// density-ratio predicate for a pair of neighboring datasets, Monte Carlo
// estimates of the RDP failure probability gamma and of the L1 risk, and
// risk-scaling sweeps.
//
// Every Monte Carlo routine runs trial i on rng.Fork(i) and reduces the
// per-trial results in trial order, so results are identical for any thread
// count.

#ifndef RDP_VERIFY_H_
#define RDP_VERIFY_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rdp/mechanisms.h"
#include "rdp/random.h"
#include "rdp/synth.h"
#include "rdp/tables.h"
#include "rdp/types.h"

namespace rdp {

struct RatioVerdict {
  bool bounded = true;
  // Supremum of |log Q(Z in B | X) / Q(Z in B | X')| over events B;
  // +infinity when one side has a point mass the other lacks.
  double max_log_ratio = 0.0;
  // Which cell breaks the bound, empty when bounded.
  std::string witness;
};

// Decides e^-alpha <= Q(B | X) / Q(B | X') <= e^alpha for all B analytically.
// Both mechanisms output product measures over cells: a Laplace density
// centred at theta_j, or a point mass at 0 for cells the sparse release
// publishes exactly. The log-ratio supremum is therefore
//   sum over noisy cells of |theta_j - theta'_j| * n alpha / 2
// provided both sides put point masses on the same cells, and +infinity
// otherwise. kIdentity is rejected.
//
// Throws std::invalid_argument unless x and x' share n and k and their
// histograms differ by moving at most one observation.
RatioVerdict ExactRatioBound(Mechanism mechanism, const HistogramLattice& x,
                             const HistogramLattice& x_prime, double alpha,
                             double gamma);
RatioVerdict ExactRatioBound(Mechanism mechanism, const BinnedDataset& x,
                             const BinnedDataset& x_prime, double alpha,
                             double gamma);

// A binomial proportion with its 95% Wilson score interval.
struct ProportionEstimate {
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  int64_t successes = 0;
  int64_t trials = 0;

  double half_width() const { return 0.5 * (upper - lower); }
};

ProportionEstimate WilsonInterval(int64_t successes, int64_t trials);

// Fraction of draws X_1..X_{n+1} iid from p for which the ratio predicate
// fails between X = (X_1..X_n) and X' = (X_1..X_{n-1}, X_{n+1}).
ProportionEstimate EstimateGamma(Mechanism mechanism, const BinDistribution& p,
                                 int64_t n, double alpha, double gamma,
                                 int64_t trials, const RandomSource& rng,
                                 int threads = 1);

struct RiskOptions {
  double alpha = 1.0;
  double gamma = 0.2;
  Projection projection = Projection::kProjected;
};

struct RiskEstimate {
  double mean_l1 = 0.0;
  // Mean |output_j - theta_j| per cell; sums to mean_l1.
  std::vector<double> per_coordinate;
  int64_t trials = 0;
  double std_error = 0.0;
};

// Monte Carlo L1 risk at theta.
RiskEstimate EstimateRisk(Mechanism mechanism, const HistogramLattice& theta,
                          const RiskOptions& options, int64_t trials,
                          const RandomSource& rng, int threads = 1);

// Per-trial L1 losses, in trial order.
std::vector<double> SimulateLosses(Mechanism mechanism,
                                   const HistogramLattice& theta,
                                   const RiskOptions& options, int64_t trials,
                                   const RandomSource& rng, int threads = 1);

enum class SweepAxis {
  kBins,     // vary k with every cell occupied
  kSupport,  // vary the number of occupied cells r at fixed k
};

// One RiskEstimate per grid value. For kBins, theta is
// BalancedHistogram(k, k, n); for kSupport, BalancedHistogram(fixed_k, r, n).
// Grid point i uses rng.Fork(i).
std::vector<SweepRow> RiskScalingSweep(Mechanism mechanism, SweepAxis axis,
                                       std::span<const int> grid, int fixed_k,
                                       int64_t n, const RiskOptions& options,
                                       int64_t trials, const RandomSource& rng,
                                       int threads = 1);

// k = 2 risk at every theta = (a/n, 1 - a/n), a = 0..n; param is a / n.
std::vector<SweepRow> EqualizerProbe(Mechanism mechanism, int64_t n,
                                     const RiskOptions& options,
                                     int64_t trials, const RandomSource& rng,
                                     int threads = 1);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Ordinary least squares; needs at least two distinct x values.
LinearFit FitLine(std::span<const double> x, std::span<const double> y);

}  // namespace rdp

#endif  // RDP_VERIFY_H_
