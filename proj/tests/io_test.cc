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


#include "rdp/io.h"

#include <filesystem>
#include <sstream>

#include "gtest/gtest.h"
#include "rdp/random.h"

namespace rdp {
namespace {

template <typename T, typename Write, typename Read>
T RoundTrip(const T& value, Write write, Read read) {
  std::stringstream ss;
  write(ss, value);
  return read(ss);
}

TEST(IoTest, DatasetRoundTrip) {
  RandomSource rng(1);
  for (int t = 0; t < 100; ++t) {
    const int k = 1 + static_cast<int>(rng.NextBelow(30));
    std::vector<int> bins(1 + rng.NextBelow(100));
    for (int& b : bins) b = static_cast<int>(rng.NextBelow(k));
    const BinnedDataset data(bins, k);
    EXPECT_EQ(RoundTrip(data, WriteDataset,
                        [](std::istream& in) { return ReadDataset(in); }),
              data);
  }
}

TEST(IoTest, HistogramDistributionVectorRoundTrip) {
  RandomSource rng(2);
  for (int t = 0; t < 100; ++t) {
    const int k = 1 + static_cast<int>(rng.NextBelow(20));
    std::vector<int64_t> counts(k);
    std::vector<double> weights(k), values(k);
    double total = 0;
    for (int j = 0; j < k; ++j) {
      counts[j] = static_cast<int64_t>(rng.NextBelow(50));
      weights[j] = rng.NextUniform();
      total += weights[j];
      values[j] = (rng.NextUniform() - 0.5) * 1e3;
    }
    counts[0] += 1;
    const HistogramLattice h(counts);
    EXPECT_EQ(RoundTrip(h, WriteHistogram, ReadHistogram), h);
    const RealVector z(values);
    EXPECT_EQ(RoundTrip(z, WriteRealVector, ReadRealVector), z);
    // Normalize so the probabilities sum to 1 within tolerance.
    for (double& w : weights) w /= total;
    try {
      const BinDistribution p(weights);
      const BinDistribution back = RoundTrip(p, WriteDistribution, ReadDistribution);
      EXPECT_TRUE(std::equal(p.probabilities().begin(), p.probabilities().end(),
                             back.probabilities().begin()));
    } catch (const std::invalid_argument&) {
      // Rounding pushed the sum outside tolerance; nothing to round-trip.
    }
  }
}

TEST(IoTest, TablesAndSampleRoundTrip) {
  const std::vector<LossRow> losses = {{0, "dp", 0.1 + 0.2}, {0, "rdp-sparse", 1e-17},
                                       {1, "dp", 2.0}};
  std::stringstream a;
  WriteLossTable(a, losses);
  EXPECT_EQ(ReadLossTable(a), losses);
  const std::vector<SweepRow> sweep = {{5, 0.0131, 0.0004}, {40, 1.0 / 3.0, 0.0}};
  std::stringstream b;
  WriteSweepTable(b, sweep);
  EXPECT_EQ(ReadSweepTable(b), sweep);
  const std::vector<double> sample = {0.1, -2.5, 1e300, 5e-324};
  std::stringstream c;
  WriteSample(c, sample);
  EXPECT_EQ(ReadSample(c), sample);
}

TEST(IoTest, EmptyFileIsAnError) {
  std::stringstream empty;
  EXPECT_THROW(ReadDataset(empty), ParseError);
  std::stringstream header_only("bin\n");
  EXPECT_THROW(ReadDataset(header_only), ParseError);
  std::stringstream empty_hist;
  EXPECT_THROW(ReadHistogram(empty_hist), ParseError);
}

TEST(IoTest, KMismatchIsAnError) {
  std::stringstream rows("# k=3\nbin\n0\n4\n");
  EXPECT_THROW(ReadDataset(rows), ParseError);
  std::stringstream hist("# k=3\ncell,count\n0,1\n1,2\n");
  EXPECT_THROW(ReadHistogram(hist), ParseError);
  std::stringstream ok("bin\n0\n1\n");
  EXPECT_THROW(ReadDataset(ok, 1), ParseError);
}

TEST(IoTest, ParseErrorsCarryLineNumbers) {
  std::stringstream bad("# k=4\nbin\n0\n1\nabc\n");
  try {
    ReadDataset(bad);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5);
  }
  std::stringstream bad_header("cell,wrong\n0,1\n");
  EXPECT_THROW(ReadHistogram(bad_header), ParseError);
}

TEST(IoTest, FormatDoubleIsShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(1.0), "1");
  EXPECT_EQ(std::stod(FormatDouble(0.1 + 0.2)), 0.1 + 0.2);
}

TEST(IoTest, AtomicWriteAndLoad) {
  const auto dir = std::filesystem::temp_directory_path() / "rdp_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "data.csv";
  std::stringstream ss;
  WriteDataset(ss, BinnedDataset({1, 2, 2}, 3));
  WriteFileAtomically(path, ss.str());
  EXPECT_EQ(LoadDataset(path), BinnedDataset({1, 2, 2}, 3));
  EXPECT_EQ(ReadFile(path), ss.str());
  int leftovers = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    leftovers += entry.path() != path;
  }
  EXPECT_EQ(leftovers, 0);
  EXPECT_THROW(LoadDataset(dir / "missing.csv"), std::exception);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace rdp
