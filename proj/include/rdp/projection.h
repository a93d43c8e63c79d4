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

#ifndef RDP_PROJECTION_H_
#define RDP_PROJECTION_H_

#include <cstdint>

#include "rdp/types.h"

namespace rdp {

// Exact L1 projection onto the lattice simplex
//   { c / n : c in Z^k, c >= 0, sum(c) = n },
// i.e. a lattice histogram minimizing sum_j |z_j - c_j / n|.
//
// The objective is separable and convex in each integer count, so the
// projection starts at the per-cell minimizer round(n * clamp(z_j, 0, 1))
// and then repairs the total one unit at a time:
//  - surplus: take from the cell with the smallest residual n*z_j - c_j among
//    cells with c_j > 0, lowest index on ties;
//  - deficit: add to the cell whose growth costs least, i.e. the largest
//    residual while any residual is positive. Once every cell costs exactly
//    +1, the cell with the larger z_j wins, then the lowest index. Cells
//    released as exact zeros therefore stay empty while any cell with z_j > 0
//    can absorb the unit.
//
// Throws std::invalid_argument for n < 1.
HistogramLattice L1Project(const RealVector& z, int64_t n);

// sum_j |z_j - c_j / n|.
double L1Distance(const RealVector& z, const HistogramLattice& hist);
double L1Distance(const HistogramLattice& a, const HistogramLattice& b);

}  // namespace rdp

#endif  // RDP_PROJECTION_H_
