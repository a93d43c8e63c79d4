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

#ifndef RDP_CLI_H_
#define RDP_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rdp/mechanisms.h"

namespace rdp::cli {

// Parameters shared by the experiment, verify and sweep commands.
struct ExperimentConfig {
  int k = 25;
  int64_t n = 500;
  int r = 2;
  double alpha = 1.0;
  double gamma = 0.2;
  int64_t trials = 100;
  uint64_t seed = 1;
  std::string out;
  std::string dist;
  std::vector<Mechanism> mechanisms{Mechanism::kDp, Mechanism::kRdpSparse};
  Projection projection = Projection::kProjected;
  int threads = 1;

  // Throws std::invalid_argument on nonpositive numeric fields.
  void Validate() const;
};

// Parses flat "key=value" lines; '#' starts a comment line. Throws ParseError
// with the offending line number.
std::map<std::string, std::string> ParseConfigText(std::string_view text);

// Runs one command. args[0] is the program name. Summaries go to `out` as
// key=value lines; diagnostics go to `err`. Returns the process exit code.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace rdp::cli

#endif  // RDP_CLI_H_
