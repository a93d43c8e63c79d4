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

// CSV formats.
//
//   dataset        # k=<k>        (optional; required unless k is supplied)
//                  bin
//                  <cell>         one row per observation
//   histogram      # k=<k>        (optional)
//                  cell,count     one row per cell, cells 0..k-1 in order
//   distribution   # k=<k>        (optional)
//                  cell,prob
//   raw vector     cell,value
//   real sample    x
//   loss table     trial,method,l1_loss
//   sweep table    param,mean_risk,std_error
//
// Other lines starting with '#' and blank lines are ignored. Writers always
// emit the "# k=" line where one applies. Doubles are written in shortest
// round-trip form, so store -> load is the identity.

#ifndef RDP_IO_H_
#define RDP_IO_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rdp/synth.h"
#include "rdp/tables.h"
#include "rdp/types.h"

namespace rdp {

// Malformed input. line() is 1-based, 0 when no line applies (empty input).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int64_t line);
  int64_t line() const { return line_; }

 private:
  int64_t line_;
};

// `k` overrides/validates the "# k=" line; one of the two must be present.
BinnedDataset ReadDataset(std::istream& in, std::optional<int> k = std::nullopt);
void WriteDataset(std::ostream& out, const BinnedDataset& data);

HistogramLattice ReadHistogram(std::istream& in);
void WriteHistogram(std::ostream& out, const HistogramLattice& hist);

BinDistribution ReadDistribution(std::istream& in);
void WriteDistribution(std::ostream& out, const BinDistribution& p);

RealVector ReadRealVector(std::istream& in);
void WriteRealVector(std::ostream& out, const RealVector& z);

std::vector<double> ReadSample(std::istream& in);
void WriteSample(std::ostream& out, const std::vector<double>& sample);

std::vector<LossRow> ReadLossTable(std::istream& in);
void WriteLossTable(std::ostream& out, const std::vector<LossRow>& rows);

std::vector<SweepRow> ReadSweepTable(std::istream& in);
void WriteSweepTable(std::ostream& out, const std::vector<SweepRow>& rows);

// Shortest decimal form that parses back to the same double.
std::string FormatDouble(double value);

// Writes `content` to a temporary sibling of `path` and renames it into
// place, so a failed write never leaves a partial file behind.
void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view content);

// File wrappers. Errors name the file; parse errors keep their line number.
std::string ReadFile(const std::filesystem::path& path);
BinnedDataset LoadDataset(const std::filesystem::path& path,
                          std::optional<int> k = std::nullopt);
HistogramLattice LoadHistogram(const std::filesystem::path& path);
BinDistribution LoadDistribution(const std::filesystem::path& path);
std::vector<double> LoadSample(const std::filesystem::path& path);

}  // namespace rdp

#endif  // RDP_IO_H_
