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

#ifndef RDP_MECHANISMS_H_
#define RDP_MECHANISMS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rdp/random.h"
#include "rdp/types.h"

namespace rdp {

class LaplaceScale {
 public:
  // Throws std::invalid_argument unless scale is finite and positive.
  explicit LaplaceScale(double scale);
  double value() const { return scale_; }

 private:
  double scale_;
};

// Per-cell noise scale 2 / (n * alpha) of the histogram perturbation method.
LaplaceScale HistogramNoiseScale(int64_t n, double alpha);

// One draw from Laplace(0, scale), density exp(-|x| / s) / (2 s).
double SampleLaplace(RandomSource& rng, LaplaceScale scale);

// alpha-DP histogram perturbation: z_j = theta_j + 2 L_j / (n alpha) with
// independent rate-one Laplace L_j, one draw per cell in index order.
RealVector DpHistogram(const HistogramLattice& hist, double alpha,
                       RandomSource& rng);
RealVector DpHistogram(const BinnedDataset& data, double alpha,
                       RandomSource& rng);

enum class Projection { kRaw, kProjected };

struct SparseReleaseConfig {
  double alpha = 1.0;
  double gamma = 0.2;
  Projection projection = Projection::kProjected;

  // Throws std::invalid_argument unless alpha > 0 and 0 < gamma <= 1.
  void Validate() const;
};

// 2k <= gamma * n: the condition under which the sparse release publishes
// empty cells without noise.
bool SparseBranchActive(int k, int64_t n, double gamma);

struct SparseRelease {
  RealVector raw;
  // Set when the config asks for the projected output.
  std::optional<HistogramLattice> projected;
  bool sparse_branch_active = false;
};

// (alpha, gamma)-RDP sparse histogram. When 2k <= gamma n, empty cells are
// released as exact zeros and every occupied cell gets independent
// Laplace(2 / (n alpha)) noise; otherwise every cell is perturbed, exactly as
// DpHistogram. Noise is drawn only for perturbed cells, in index order.
SparseRelease RdpSparseHistogram(const HistogramLattice& hist,
                                 const SparseReleaseConfig& config,
                                 RandomSource& rng);
SparseRelease RdpSparseHistogram(const BinnedDataset& data,
                                 const SparseReleaseConfig& config,
                                 RandomSource& rng);

// The histogram mechanisms known to the verification layer and the CLI.
// kIdentity releases theta unchanged and serves as a zero-risk baseline.
enum class Mechanism { kIdentity, kDp, kRdpSparse };

std::string_view MechanismName(Mechanism mechanism);
// Accepts "identity", "dp" and "rdp-sparse".
Mechanism ParseMechanism(std::string_view name);

struct HistogramReleaseParams {
  double alpha = 1.0;
  double gamma = 0.2;  // read by kRdpSparse only
};

// Pre-projection output z of `mechanism` on `hist`.
RealVector ReleaseRaw(Mechanism mechanism, const HistogramLattice& hist,
                      const HistogramReleaseParams& params, RandomSource& rng);

}  // namespace rdp

#endif  // RDP_MECHANISMS_H_
