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

#include "rdp/mechanisms.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "rdp/projection.h"

namespace rdp {

namespace {

void CheckAlpha(double alpha) {
  if (!(std::isfinite(alpha) && alpha > 0)) {
    throw std::invalid_argument("alpha must be finite and > 0");
  }
}

}  // namespace

LaplaceScale::LaplaceScale(double scale) : scale_(scale) {
  if (!(std::isfinite(scale) && scale > 0)) {
    throw std::invalid_argument("Laplace scale must be finite and > 0");
  }
}

LaplaceScale HistogramNoiseScale(int64_t n, double alpha) {
  CheckAlpha(alpha);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return LaplaceScale(2.0 / (static_cast<double>(n) * alpha));
}

double SampleLaplace(RandomSource& rng, LaplaceScale scale) {
  return scale.value() * rng.NextLaplace();
}

RealVector DpHistogram(const HistogramLattice& hist, double alpha,
                       RandomSource& rng) {
  const LaplaceScale scale = HistogramNoiseScale(hist.n(), alpha);
  std::vector<double> z(hist.k());
  for (int j = 0; j < hist.k(); ++j) {
    z[j] = hist.proportion(j) + SampleLaplace(rng, scale);
  }
  return RealVector(std::move(z));
}

RealVector DpHistogram(const BinnedDataset& data, double alpha,
                       RandomSource& rng) {
  return DpHistogram(HistogramOf(data), alpha, rng);
}

void SparseReleaseConfig::Validate() const {
  CheckAlpha(alpha);
  if (!(gamma > 0 && gamma <= 1)) {
    throw std::invalid_argument("gamma must lie in (0, 1]");
  }
}

bool SparseBranchActive(int k, int64_t n, double gamma) {
  return 2.0 * k <= gamma * static_cast<double>(n);
}

SparseRelease RdpSparseHistogram(const HistogramLattice& hist,
                                 const SparseReleaseConfig& config,
                                 RandomSource& rng) {
  config.Validate();
  const bool sparse = SparseBranchActive(hist.k(), hist.n(), config.gamma);
  const LaplaceScale scale = HistogramNoiseScale(hist.n(), config.alpha);
  std::vector<double> z(hist.k());
  for (int j = 0; j < hist.k(); ++j) {
    if (sparse && hist.count(j) == 0) {
      z[j] = 0.0;
    } else {
      z[j] = hist.proportion(j) + SampleLaplace(rng, scale);
    }
  }
  SparseRelease release{RealVector(std::move(z)), std::nullopt, sparse};
  if (config.projection == Projection::kProjected) {
    release.projected = L1Project(release.raw, hist.n());
  }
  return release;
}

SparseRelease RdpSparseHistogram(const BinnedDataset& data,
                                 const SparseReleaseConfig& config,
                                 RandomSource& rng) {
  return RdpSparseHistogram(HistogramOf(data), config, rng);
}

std::string_view MechanismName(Mechanism mechanism) {
  switch (mechanism) {
    case Mechanism::kIdentity:
      return "identity";
    case Mechanism::kDp:
      return "dp";
    case Mechanism::kRdpSparse:
      return "rdp-sparse";
  }
  return "unknown";
}

Mechanism ParseMechanism(std::string_view name) {
  if (name == "identity") return Mechanism::kIdentity;
  if (name == "dp") return Mechanism::kDp;
  if (name == "rdp-sparse" || name == "rdp") return Mechanism::kRdpSparse;
  throw std::invalid_argument("unknown mechanism '" + std::string(name) +
                              "' (expected dp, rdp-sparse or identity)");
}

RealVector ReleaseRaw(Mechanism mechanism, const HistogramLattice& hist,
                      const HistogramReleaseParams& params, RandomSource& rng) {
  switch (mechanism) {
    case Mechanism::kIdentity:
      return RealVector(hist.proportions());
    case Mechanism::kDp:
      return DpHistogram(hist, params.alpha, rng);
    case Mechanism::kRdpSparse:
      return RdpSparseHistogram(
                 hist, {params.alpha, params.gamma, Projection::kRaw}, rng)
          .raw;
  }
  throw std::invalid_argument("unknown mechanism");
}

}  // namespace rdp
