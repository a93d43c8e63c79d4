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

#ifndef RDP_RANDOM_H_
#define RDP_RANDOM_H_

#include <array>
#include <cstdint>

namespace rdp {

// Philox4x32 with 10 rounds (Salmon et al., "Parallel random numbers: as easy
// as 1, 2, 3"). Pure function of (counter, key).
std::array<uint32_t, 4> Philox4x32(std::array<uint32_t, 4> counter,
                                   std::array<uint32_t, 2> key);

// Counter-based random stream addressed by (seed, stream). The seed is the
// Philox key; the stream id occupies the upper half of the 128-bit counter
// and the draw index the lower half. Two sources built from the same
// (seed, stream) produce bit-identical sequences on every platform, and a
// copy continues from the same position as the original.
//
// Monte Carlo loops derive one stream per trial with Fork(), so results do
// not depend on the order in which trials run.
class RandomSource {
 public:
  explicit RandomSource(uint64_t seed, uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  uint64_t seed() const { return seed_; }
  uint64_t stream() const { return stream_; }

  // A fresh source (position zero) on a stream derived from this one's
  // stream id and `child`. Independent of how much this source has drawn.
  RandomSource Fork(uint64_t child) const;

  uint32_t NextU32();
  uint64_t NextU64();

  // Uniform on [0, 1) with 53 bits of resolution.
  double NextUniform();
  // Uniform on the open interval (0, 1).
  double NextOpenUniform();
  // Uniform integer in [0, bound); bound must be positive. Unbiased.
  uint64_t NextBelow(uint64_t bound);

  // Mean-zero Laplace with rate one (density exp(-|x|)/2).
  double NextLaplace();

 private:
  void Refill();

  uint64_t seed_;
  uint64_t stream_;
  uint64_t counter_ = 0;
  std::array<uint32_t, 4> block_{};
  int used_ = 4;
};

}  // namespace rdp

#endif  // RDP_RANDOM_H_
