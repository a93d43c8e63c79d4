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

#include <unistd.h>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

namespace rdp {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(Trim(line.substr(start)));
      return fields;
    }
    fields.push_back(Trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

// Walks the data lines of a CSV stream, skipping blanks and comments and
// picking up an optional "# k=<k>" line on the way.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  // Next data line split into fields; false at end of input.
  bool Next(std::vector<std::string_view>& fields) {
    while (std::getline(in_, line_)) {
      ++line_number_;
      std::string_view view = Trim(line_);
      if (view.empty()) continue;
      if (view.front() == '#') {
        ParseDirective(view.substr(1));
        continue;
      }
      fields = SplitFields(view);
      return true;
    }
    return false;
  }

  void ExpectHeader(std::initializer_list<std::string_view> names) {
    std::vector<std::string_view> fields;
    if (!Next(fields)) throw ParseError("empty input, expected a header", 0);
    bool ok = fields.size() == names.size();
    size_t i = 0;
    for (auto name : names) {
      if (!ok) break;
      ok = fields[i++] == name;
    }
    if (!ok) {
      std::string expected;
      for (auto name : names) {
        if (!expected.empty()) expected += ',';
        expected += name;
      }
      Fail("expected header '" + expected + "'");
    }
  }

  void ExpectFields(const std::vector<std::string_view>& fields,
                    size_t count) const {
    if (fields.size() != count) {
      Fail("expected " + std::to_string(count) + " fields, got " +
           std::to_string(fields.size()));
    }
  }

  template <typename T>
  T ParseNumber(std::string_view field) const {
    T value{};
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() ||
        field.empty()) {
      Fail("cannot parse '" + std::string(field) + "' as a number");
    }
    return value;
  }

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(message, line_number_);
  }

  std::optional<int> declared_k() const { return declared_k_; }
  int64_t line_number() const { return line_number_; }

 private:
  void ParseDirective(std::string_view body) {
    body = Trim(body);
    if (body.substr(0, 2) != "k=") return;
    const int k = ParseNumber<int>(Trim(body.substr(2)));
    if (k < 1) Fail("k must be >= 1");
    declared_k_ = k;
  }

  std::istream& in_;
  std::string line_;
  int64_t line_number_ = 0;
  std::optional<int> declared_k_;
};

// Reads "cell,<value>" rows; cells must run 0, 1, 2, ... without gaps.
template <typename T>
std::vector<T> ReadCellColumn(std::istream& in, std::string_view value_name) {
  CsvReader reader(in);
  reader.ExpectHeader({"cell", value_name});
  std::vector<T> values;
  std::vector<std::string_view> fields;
  while (reader.Next(fields)) {
    reader.ExpectFields(fields, 2);
    const auto cell = reader.ParseNumber<int64_t>(fields[0]);
    if (cell != static_cast<int64_t>(values.size())) {
      reader.Fail("expected cell " + std::to_string(values.size()) + ", got " +
                  std::to_string(cell));
    }
    values.push_back(reader.ParseNumber<T>(fields[1]));
  }
  if (values.empty()) reader.Fail("no rows");
  if (reader.declared_k() && *reader.declared_k() != static_cast<int>(values.size())) {
    reader.Fail("header declares k=" + std::to_string(*reader.declared_k()) +
                " but found " + std::to_string(values.size()) + " cells");
  }
  return values;
}

template <typename Fn>
auto Rethrow(const std::filesystem::path& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return fn(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ":" + std::to_string(e.line()) + ": " +
                         e.what(),
                     e.line());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

}  // namespace

ParseError::ParseError(const std::string& message, int64_t line)
    : std::runtime_error(message), line_(line) {}

std::string FormatDouble(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

BinnedDataset ReadDataset(std::istream& in, std::optional<int> k) {
  CsvReader reader(in);
  reader.ExpectHeader({"bin"});
  std::vector<int> bins;
  std::vector<int64_t> lines;
  std::vector<std::string_view> fields;
  while (reader.Next(fields)) {
    reader.ExpectFields(fields, 1);
    bins.push_back(reader.ParseNumber<int>(fields[0]));
    lines.push_back(reader.line_number());
  }
  if (bins.empty()) reader.Fail("dataset has no rows");

  std::optional<int> declared = reader.declared_k();
  if (k && declared && *k != *declared) {
    reader.Fail("header declares k=" + std::to_string(*declared) +
                " but k=" + std::to_string(*k) + " was requested");
  }
  const std::optional<int> bin_count = k ? k : declared;
  if (!bin_count) reader.Fail("bin count unknown: add '# k=<k>' or pass k");
  for (size_t i = 0; i < bins.size(); ++i) {
    if (bins[i] < 0 || bins[i] >= *bin_count) {
      throw ParseError("bin " + std::to_string(bins[i]) + " outside [0, " +
                           std::to_string(*bin_count) + ")",
                       lines[i]);
    }
  }
  return BinnedDataset(std::move(bins), *bin_count);
}

void WriteDataset(std::ostream& out, const BinnedDataset& data) {
  out << "# k=" << data.k() << "\nbin\n";
  for (int b : data.bins()) out << b << '\n';
}

HistogramLattice ReadHistogram(std::istream& in) {
  return HistogramLattice(ReadCellColumn<int64_t>(in, "count"));
}

void WriteHistogram(std::ostream& out, const HistogramLattice& hist) {
  out << "# k=" << hist.k() << "\ncell,count\n";
  for (int j = 0; j < hist.k(); ++j) out << j << ',' << hist.count(j) << '\n';
}

BinDistribution ReadDistribution(std::istream& in) {
  return BinDistribution(ReadCellColumn<double>(in, "prob"));
}

void WriteDistribution(std::ostream& out, const BinDistribution& p) {
  out << "# k=" << p.k() << "\ncell,prob\n";
  for (int j = 0; j < p.k(); ++j) {
    out << j << ',' << FormatDouble(p.probabilities()[j]) << '\n';
  }
}

RealVector ReadRealVector(std::istream& in) {
  return RealVector(ReadCellColumn<double>(in, "value"));
}

void WriteRealVector(std::ostream& out, const RealVector& z) {
  out << "# k=" << z.k() << "\ncell,value\n";
  for (int j = 0; j < z.k(); ++j) out << j << ',' << FormatDouble(z[j]) << '\n';
}

std::vector<double> ReadSample(std::istream& in) {
  CsvReader reader(in);
  reader.ExpectHeader({"x"});
  std::vector<double> sample;
  std::vector<std::string_view> fields;
  while (reader.Next(fields)) {
    reader.ExpectFields(fields, 1);
    sample.push_back(reader.ParseNumber<double>(fields[0]));
  }
  if (sample.empty()) reader.Fail("sample has no rows");
  return sample;
}

void WriteSample(std::ostream& out, const std::vector<double>& sample) {
  out << "x\n";
  for (double x : sample) out << FormatDouble(x) << '\n';
}

std::vector<LossRow> ReadLossTable(std::istream& in) {
  CsvReader reader(in);
  reader.ExpectHeader({"trial", "method", "l1_loss"});
  std::vector<LossRow> rows;
  std::vector<std::string_view> fields;
  while (reader.Next(fields)) {
    reader.ExpectFields(fields, 3);
    rows.push_back({reader.ParseNumber<int64_t>(fields[0]),
                    std::string(fields[1]),
                    reader.ParseNumber<double>(fields[2])});
  }
  return rows;
}

void WriteLossTable(std::ostream& out, const std::vector<LossRow>& rows) {
  out << "trial,method,l1_loss\n";
  for (const auto& row : rows) {
    out << row.trial << ',' << row.method << ',' << FormatDouble(row.l1_loss)
        << '\n';
  }
}

std::vector<SweepRow> ReadSweepTable(std::istream& in) {
  CsvReader reader(in);
  reader.ExpectHeader({"param", "mean_risk", "std_error"});
  std::vector<SweepRow> rows;
  std::vector<std::string_view> fields;
  while (reader.Next(fields)) {
    reader.ExpectFields(fields, 3);
    rows.push_back({reader.ParseNumber<double>(fields[0]),
                    reader.ParseNumber<double>(fields[1]),
                    reader.ParseNumber<double>(fields[2])});
  }
  return rows;
}

void WriteSweepTable(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "param,mean_risk,std_error\n";
  for (const auto& row : rows) {
    out << FormatDouble(row.param) << ',' << FormatDouble(row.mean_risk) << ','
        << FormatDouble(row.std_error) << '\n';
  }
}

void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw std::runtime_error("write failed for " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw std::runtime_error("cannot rename into " + path.string() + ": " +
                             ec.message());
  }
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

BinnedDataset LoadDataset(const std::filesystem::path& path,
                          std::optional<int> k) {
  return Rethrow(path, [&](std::istream& in) { return ReadDataset(in, k); });
}

HistogramLattice LoadHistogram(const std::filesystem::path& path) {
  return Rethrow(path, [](std::istream& in) { return ReadHistogram(in); });
}

BinDistribution LoadDistribution(const std::filesystem::path& path) {
  return Rethrow(path, [](std::istream& in) { return ReadDistribution(in); });
}

std::vector<double> LoadSample(const std::filesystem::path& path) {
  return Rethrow(path, [](std::istream& in) { return ReadSample(in); });
}

}  // namespace rdp
