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

#ifndef RDP_TABLES_H_
#define RDP_TABLES_H_

#include <cstdint>
#include <string>

namespace rdp {

// One row of a loss-distribution table: trial,method,l1_loss.
struct LossRow {
  int64_t trial = 0;
  std::string method;
  double l1_loss = 0.0;

  friend bool operator==(const LossRow&, const LossRow&) = default;
};

// One row of a scaling sweep: param,mean_risk,std_error.
struct SweepRow {
  double param = 0.0;
  double mean_risk = 0.0;
  double std_error = 0.0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

}  // namespace rdp

#endif  // RDP_TABLES_H_
