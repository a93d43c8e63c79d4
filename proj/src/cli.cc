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

#include "rdp/cli.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "rdp/io.h"
#include "rdp/projection.h"
#include "rdp/sensitivity.h"
#include "rdp/synth.h"
#include "rdp/verify.h"

namespace rdp::cli {

namespace {

// Config keys that map to value-less flags.
const std::set<std::string, std::less<>> kBooleanFlags = {"no-project",
                                                          "equalizer"};

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

bool ParseBool(const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") {
    return true;
  }
  if (value == "false" || value == "0" || value == "no" || value == "off") {
    return false;
  }
  throw std::invalid_argument("expected a boolean, got '" + value + "'");
}

// Splices the --config file's settings in right after the subcommand name,
// ahead of the user's own flags. Options keep their last value, so explicit
// flags win over the file, which wins over built-in defaults.
std::vector<std::string> ExpandConfig(const std::vector<std::string>& args) {
  std::string path;
  std::vector<std::string> kept;
  for (size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--config") {
      if (i + 1 >= args.size()) throw std::invalid_argument("--config needs a path");
      path = args[++i];
    } else if (a.rfind("--config=", 0) == 0) {
      path = a.substr(9);
    } else {
      kept.push_back(a);
    }
  }
  if (path.empty()) return kept;

  std::map<std::string, std::string> settings;
  try {
    settings = ParseConfigText(ReadFile(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + std::to_string(e.line()) + ": " + e.what(),
                     e.line());
  }
  std::vector<std::string> injected;
  for (const auto& [key, value] : settings) {
    if (kBooleanFlags.count(key)) {
      if (ParseBool(value)) injected.push_back("--" + key);
    } else {
      injected.push_back("--" + key + "=" + value);
    }
  }
  // Insert after the first positional token (the subcommand).
  auto at = std::find_if(kept.begin() + (kept.empty() ? 0 : 1), kept.end(),
                         [](const std::string& s) { return s.rfind('-', 0) != 0; });
  if (at != kept.end()) ++at;
  kept.insert(at, injected.begin(), injected.end());
  return kept;
}

std::vector<int> ParseIntList(const std::string& text, const char* flag) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = Trim(item);
    if (item.empty()) continue;
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 1) {
      throw std::invalid_argument(std::string(flag) + ": '" + item +
                                  "' is not a positive integer");
    }
    values.push_back(v);
  }
  if (values.empty()) throw std::invalid_argument(std::string(flag) + ": empty list");
  return values;
}

std::vector<Mechanism> ParseMechanismList(const std::string& text) {
  std::vector<Mechanism> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = Trim(item);
    if (!item.empty()) out.push_back(ParseMechanism(item));
  }
  if (out.empty()) throw std::invalid_argument("--mech: empty list");
  return out;
}

double Median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const size_t m = values.size();
  return m % 2 == 1 ? values[m / 2] : 0.5 * (values[m / 2 - 1] + values[m / 2]);
}

void Emit(std::ostream& out, std::string_view key, double value) {
  out << key << '=' << FormatDouble(value) << '\n';
}
void Emit(std::ostream& out, std::string_view key, std::string_view value) {
  out << key << '=' << value << '\n';
}
void Emit(std::ostream& out, std::string_view key, int64_t value) {
  out << key << '=' << value << '\n';
}
void Emit(std::ostream& out, std::string_view key, bool value) {
  out << key << '=' << (value ? "true" : "false") << '\n';
}

template <typename Writer>
void WriteOutput(const std::string& path, Writer&& writer) {
  std::ostringstream buffer;
  writer(buffer);
  WriteFileAtomically(path, buffer.str());
}

// Flags shared by the experiment-style commands.
struct CommonFlags {
  std::string mech;
  bool no_project = false;
};

void AddExperimentFlags(CLI::App* cmd, ExperimentConfig& config,
                        CommonFlags& flags, bool with_r = true) {
  cmd->add_option("--n", config.n, "Number of observations");
  if (with_r) cmd->add_option("--r", config.r, "Number of occupied cells");
  cmd->add_option("--alpha", config.alpha, "Privacy parameter alpha");
  cmd->add_option("--gamma", config.gamma, "RDP failure probability gamma");
  cmd->add_option("--trials", config.trials, "Monte Carlo trials");
  cmd->add_option("--seed", config.seed, "Random seed");
  cmd->add_option("--out", config.out, "Output CSV path");
  cmd->add_option("--dist", config.dist, "Distribution CSV (cell,prob)");
  cmd->add_option("--threads", config.threads, "Worker threads");
  cmd->add_option("--mech", flags.mech, "Mechanism(s): dp, rdp-sparse");
  cmd->add_flag("--no-project", flags.no_project,
                "Score raw noisy vectors instead of projected histograms");
}

void Finish(ExperimentConfig& config, const CommonFlags& flags) {
  if (!flags.mech.empty()) config.mechanisms = ParseMechanismList(flags.mech);
  config.projection =
      flags.no_project ? Projection::kRaw : Projection::kProjected;
  config.Validate();
}

// The distribution behind an experiment: --dist if given, else equal mass on
// r cells spread over [0, k).
BinDistribution SourceDistribution(const ExperimentConfig& config) {
  if (!config.dist.empty()) return LoadDistribution(config.dist);
  return BinDistribution::UniformOn(config.k, SpreadCells(config.k, config.r));
}

void EmitConfig(std::ostream& out, const ExperimentConfig& config, int k) {
  Emit(out, "k", int64_t{k});
  Emit(out, "n", config.n);
  Emit(out, "alpha", config.alpha);
  Emit(out, "gamma", config.gamma);
  Emit(out, "trials", config.trials);
  Emit(out, "seed", static_cast<int64_t>(config.seed));
  Emit(out, "projection", config.projection == Projection::kProjected
                              ? std::string_view("projected")
                              : std::string_view("raw"));
}

// --- release ---------------------------------------------------------------

struct ReleaseArgs {
  std::string mech = "rdp-sparse";
  double alpha = 1.0;
  double gamma = 0.2;
  std::string in;
  std::string out;
  int k = 0;
  uint64_t seed = 1;
  bool no_project = false;
};

int CmdRelease(const ReleaseArgs& args, std::ostream& out, std::ostream& err) {
  const Mechanism mechanism = ParseMechanism(args.mech);
  if (mechanism == Mechanism::kIdentity) {
    throw std::invalid_argument("release: identity is not a private mechanism");
  }
  const BinnedDataset data =
      LoadDataset(args.in, args.k > 0 ? std::optional<int>(args.k) : std::nullopt);
  const HistogramLattice hist = HistogramOf(data);
  RandomSource rng(args.seed);

  PrivacyBudget budget(args.alpha);
  bool sparse = false;
  RealVector raw({0.0});
  if (mechanism == Mechanism::kDp) {
    raw = DpHistogram(hist, args.alpha, rng);
  } else {
    const SparseReleaseConfig config{args.alpha, args.gamma, Projection::kRaw};
    const SparseRelease release = RdpSparseHistogram(hist, config, rng);
    raw = release.raw;
    sparse = release.sparse_branch_active;
    if (sparse) {
      budget = PrivacyBudget(args.alpha, args.gamma);
    } else {
      err << "warning: sparse branch inactive (2k=" << 2 * hist.k()
          << " > gamma*n=" << FormatDouble(args.gamma * hist.n())
          << "); every cell is perturbed and the release is alpha-DP\n";
    }
  }

  if (args.no_project) {
    WriteOutput(args.out, [&](std::ostream& s) { WriteRealVector(s, raw); });
  } else {
    const HistogramLattice projected = L1Project(raw, hist.n());
    WriteOutput(args.out, [&](std::ostream& s) { WriteHistogram(s, projected); });
  }
  Emit(out, "mechanism", MechanismName(mechanism));
  Emit(out, "k", int64_t{hist.k()});
  Emit(out, "n", hist.n());
  if (mechanism == Mechanism::kRdpSparse) Emit(out, "sparse_branch_active", sparse);
  Emit(out, "budget.alpha", budget.alpha());
  Emit(out, "budget.gamma", budget.gamma());
  Emit(out, "budget.eta", budget.eta());
  Emit(out, "output", args.out);
  return 0;
}

// --- experiments -----------------------------------------------------------

int CmdExperiment(std::string_view name, ExperimentConfig config,
                  const std::vector<std::string>& notes, std::ostream& out) {
  const BinDistribution p = SourceDistribution(config);
  const RandomSource base(config.seed);
  RandomSource data_rng = base.Fork(0);
  const HistogramLattice theta = HistogramOf(SampleDataset(p, config.n, data_rng));
  const int occupied = theta.k() - static_cast<int>(EmptyCells(theta).size());

  const RiskOptions options{config.alpha, config.gamma, config.projection};
  std::vector<std::vector<double>> losses;
  for (size_t m = 0; m < config.mechanisms.size(); ++m) {
    // Stream per mechanism name, so adding or reordering --mech entries does
    // not change any one mechanism's losses.
    const uint64_t stream = 1 + static_cast<uint64_t>(config.mechanisms[m]);
    losses.push_back(SimulateLosses(config.mechanisms[m], theta, options,
                                    config.trials, base.Fork(stream),
                                    config.threads));
  }

  if (!config.out.empty()) {
    std::vector<LossRow> rows;
    for (int64_t t = 0; t < config.trials; ++t) {
      for (size_t m = 0; m < config.mechanisms.size(); ++m) {
        rows.push_back({t, std::string(MechanismName(config.mechanisms[m])),
                        losses[m][t]});
      }
    }
    WriteOutput(config.out, [&](std::ostream& s) { WriteLossTable(s, rows); });
  }

  Emit(out, "experiment", name);
  for (const auto& note : notes) Emit(out, "note", note);
  EmitConfig(out, config, theta.k());
  Emit(out, "occupied_cells", int64_t{occupied});
  Emit(out, "sparse_branch_active",
       SparseBranchActive(theta.k(), theta.n(), config.gamma));
  for (size_t m = 0; m < config.mechanisms.size(); ++m) {
    const std::string prefix(MechanismName(config.mechanisms[m]));
    const auto& l = losses[m];
    Emit(out, prefix + ".median", Median(l));
    Emit(out, prefix + ".mean", std::accumulate(l.begin(), l.end(), 0.0) /
                                    static_cast<double>(l.size()));
    Emit(out, prefix + ".min", *std::min_element(l.begin(), l.end()));
    Emit(out, prefix + ".max", *std::max_element(l.begin(), l.end()));
  }
  if (!config.out.empty()) Emit(out, "output", config.out);
  return 0;
}

// --- verify ----------------------------------------------------------------

int CmdVerify(const ExperimentConfig& config, std::ostream& out) {
  const BinDistribution p = SourceDistribution(config);
  for (Mechanism m : config.mechanisms) {
    const ProportionEstimate gamma_hat =
        EstimateGamma(m, p, config.n, config.alpha, config.gamma, config.trials,
                      RandomSource(config.seed).Fork(static_cast<uint64_t>(m)),
                      config.threads);
    const std::string prefix(MechanismName(m));
    Emit(out, prefix + ".gamma_hat", gamma_hat.estimate);
    Emit(out, prefix + ".ci_lower", gamma_hat.lower);
    Emit(out, prefix + ".ci_upper", gamma_hat.upper);
    Emit(out, prefix + ".half_width", gamma_hat.half_width());
    Emit(out, prefix + ".failures", gamma_hat.successes);
  }
  EmitConfig(out, config, p.k());
  const bool sparse = SparseBranchActive(p.k(), config.n, config.gamma);
  Emit(out, "sparse_branch_active", sparse);
  if (sparse) {
    // The failure event needs X_n or X_{n+1} to land in a cell holding at
    // most one of the n+1 draws: probability at most 2k / (n + 1).
    Emit(out, "proof_bound",
         2.0 * p.k() / static_cast<double>(config.n + 1));
  }
  return 0;
}

// --- sweep -----------------------------------------------------------------

struct SweepArgs {
  std::string k_list = "5,10,20,40";
  std::string r_list;
  bool equalizer = false;
};

int CmdSweep(const ExperimentConfig& config, const SweepArgs& args,
             std::ostream& out) {
  if (config.mechanisms.size() != 1) {
    throw std::invalid_argument("sweep: pass exactly one --mech");
  }
  const Mechanism mechanism = config.mechanisms.front();
  const RiskOptions options{config.alpha, config.gamma, config.projection};
  const RandomSource rng(config.seed);

  std::vector<SweepRow> rows;
  std::string axis;
  if (args.equalizer) {
    axis = "theta";
    rows = EqualizerProbe(mechanism, config.n, options, config.trials, rng,
                          config.threads);
  } else if (!args.r_list.empty()) {
    axis = "r";
    const std::vector<int> k = ParseIntList(args.k_list, "--k");
    if (k.size() != 1) {
      throw std::invalid_argument("sweep: with --r, --k must be a single value");
    }
    const std::vector<int> grid = ParseIntList(args.r_list, "--r");
    rows = RiskScalingSweep(mechanism, SweepAxis::kSupport, grid, k.front(),
                            config.n, options, config.trials, rng,
                            config.threads);
  } else {
    axis = "k";
    const std::vector<int> grid = ParseIntList(args.k_list, "--k");
    rows = RiskScalingSweep(mechanism, SweepAxis::kBins, grid, 0, config.n,
                            options, config.trials, rng, config.threads);
  }
  if (!config.out.empty()) {
    WriteOutput(config.out, [&](std::ostream& s) { WriteSweepTable(s, rows); });
  }

  Emit(out, "mechanism", MechanismName(mechanism));
  Emit(out, "axis", axis);
  Emit(out, "n", config.n);
  Emit(out, "alpha", config.alpha);
  Emit(out, "gamma", config.gamma);
  Emit(out, "trials", config.trials);
  Emit(out, "seed", static_cast<int64_t>(config.seed));
  std::vector<double> x, y;
  bool monotone = true;
  for (const auto& row : rows) {
    Emit(out, "risk." + FormatDouble(row.param), row.mean_risk);
    if (!y.empty() && row.mean_risk < y.back()) monotone = false;
    x.push_back(row.param);
    y.push_back(row.mean_risk);
  }
  if (rows.size() >= 2) {
    const LinearFit fit = FitLine(x, y);
    Emit(out, "fit.slope", fit.slope);
    Emit(out, "fit.intercept", fit.intercept);
    Emit(out, "fit.r_squared", fit.r_squared);
    const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
    if (*lo > 0) Emit(out, "max_over_min", *hi / *lo);
  }
  if (!args.equalizer) Emit(out, "monotone", monotone);
  if (!config.out.empty()) Emit(out, "output", config.out);
  return 0;
}

// --- scalar-release ----------------------------------------------------------

struct ScalarArgs {
  std::string in;
  std::string stat = "mean";
  double trim = 0.1;
  std::string h = "absdiff";
  double lo = 0.0;
  double hi = 1.0;
  double alpha = 1.0;
  double gamma = 0.4;  // target gamma2 for the default calibration
  double gamma1 = 0.05;
  double delta = 0.0;
  double delta_prime = 0.0;
  double beta = 0.0;
  double beta_c = 1.0;
  std::string estimator = "split-pair";
  uint64_t seed = 1;
};

int CmdScalarRelease(const ScalarArgs& args, std::ostream& out) {
  const std::vector<double> sample = LoadSample(args.in);
  const auto n = static_cast<int64_t>(sample.size());
  if (!(args.lo < args.hi)) throw std::invalid_argument("need --lo < --hi");
  for (double x : sample) {
    if (x < args.lo || x > args.hi) {
      throw std::invalid_argument("sample value " + FormatDouble(x) +
                                  " outside [--lo, --hi]");
    }
  }
  if (args.h != "absdiff") {
    throw std::invalid_argument("unknown --h '" + args.h + "' (expected absdiff)");
  }
  EstimatorKind kind;
  if (args.estimator == "split-pair") {
    kind = EstimatorKind::kSplitPair;
  } else if (args.estimator == "u-statistic") {
    kind = EstimatorKind::kUStatistic;
  } else {
    throw std::invalid_argument("unknown --estimator '" + args.estimator + "'");
  }

  // The mean moves by |x - x'| / n when one point is replaced. The trimmed
  // mean moves by at most |x - x'| / (n - 2 cut): every order statistic
  // shifts in the same direction and the shifts sum to |x - x'|.
  std::function<double(std::span<const double>)> statistic;
  double h_scale = 1.0;
  if (args.stat == "mean") {
    statistic = [](std::span<const double> d) { return Mean(d); };
  } else if (args.stat == "trimmed-mean") {
    const double trim = args.trim;
    statistic = [trim](std::span<const double> d) { return TrimmedMean(d, trim); };
    const auto cut = static_cast<int64_t>(std::floor(trim * static_cast<double>(n)));
    h_scale = static_cast<double>(n) / static_cast<double>(n - 2 * cut);
  } else {
    throw std::invalid_argument("unknown --stat '" + args.stat +
                                "' (expected mean or trimmed-mean)");
  }
  const auto h = [h_scale](double x, double y) { return h_scale * AbsDiff(x, y); };

  const double beta = args.beta > 0 ? args.beta : DefaultBeta(n, args.beta_c);
  QuantileConfig config;
  if (args.delta > 0 || args.delta_prime > 0) {
    config = QuantileConfig{args.delta, args.delta_prime, beta};
    config.Validate();
  } else {
    config = QuantileConfig::Calibrate(args.gamma, std::max<int64_t>(n / 2, 1), beta);
  }

  RandomSource rng(args.seed);
  const ScalarRelease release = RdpReleaseScalar(
      std::span<const double>(sample), statistic, h, config, args.alpha,
      args.gamma1, rng, kind);

  Emit(out, "value", release.value);
  Emit(out, "n", n);
  Emit(out, "stat", args.stat);
  Emit(out, "delta", config.delta);
  Emit(out, "delta_prime", config.delta_prime);
  Emit(out, "beta", config.beta);
  Emit(out, "quantile", release.quantile);
  Emit(out, "local_scale", release.local_scale);
  Emit(out, "noise_scale", release.noise_scale);
  Emit(out, "degenerate", release.degenerate);
  Emit(out, "budget.alpha", release.budget.alpha());
  Emit(out, "budget.eta", release.budget.eta());
  Emit(out, "budget.gamma", release.budget.gamma());
  return 0;
}

// --- generate / synthesize ---------------------------------------------------

int CmdGenerate(const ExperimentConfig& config, std::ostream& out) {
  const BinDistribution p = SourceDistribution(config);
  RandomSource rng(config.seed);
  const BinnedDataset data = SampleDataset(p, config.n, rng);
  if (config.out.empty()) throw std::invalid_argument("generate: --out is required");
  WriteOutput(config.out, [&](std::ostream& s) { WriteDataset(s, data); });
  Emit(out, "k", int64_t{data.k()});
  Emit(out, "n", data.size());
  Emit(out, "empty_cells", static_cast<int64_t>(SupportSet(data).size()));
  Emit(out, "output", config.out);
  return 0;
}

struct SynthesizeArgs {
  std::string in;
  std::string out;
  int64_t count = 1000;
  uint64_t seed = 1;
};

int CmdSynthesize(const SynthesizeArgs& args, std::ostream& out) {
  const HistogramLattice hist = LoadHistogram(args.in);
  RandomSource rng(args.seed);
  const BinnedDataset data = SampleSynthetic(hist, args.count, rng);
  WriteOutput(args.out, [&](std::ostream& s) { WriteDataset(s, data); });
  Emit(out, "k", int64_t{data.k()});
  Emit(out, "count", data.size());
  Emit(out, "output", args.out);
  return 0;
}

}  // namespace

void ExperimentConfig::Validate() const {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  if (dist.empty() && r > k) throw std::invalid_argument("r must be <= k");
  if (!(std::isfinite(alpha) && alpha > 0)) {
    throw std::invalid_argument("alpha must be > 0");
  }
  if (!(gamma > 0 && gamma <= 1)) throw std::invalid_argument("gamma must lie in (0, 1]");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (mechanisms.empty()) throw std::invalid_argument("no mechanism selected");
}

std::map<std::string, std::string> ParseConfigText(std::string_view text) {
  std::map<std::string, std::string> settings;
  std::stringstream ss{std::string(text)};
  std::string line;
  int64_t line_number = 0;
  while (std::getline(ss, line)) {
    ++line_number;
    const std::string body = Trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected key=value", line_number);
    }
    std::string key = Trim(body.substr(0, eq));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    const std::string value = Trim(body.substr(eq + 1));
    if (key.empty()) throw ParseError("empty key", line_number);
    if (key == "config") throw ParseError("config files cannot nest", line_number);
    settings[key] = value;
  }
  return settings;
}

int Run(const std::vector<std::string>& raw_args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Differentially private and randomly differentially private "
               "histogram release"};
  app.name(raw_args.empty() ? "rdp" : raw_args.front());
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  std::function<int()> action;

  ReleaseArgs release;
  auto* cmd_release = app.add_subcommand("release", "Release a private histogram");
  cmd_release->add_option("--mech", release.mech, "dp or rdp-sparse");
  cmd_release->add_option("--alpha", release.alpha, "Privacy parameter alpha");
  cmd_release->add_option("--gamma", release.gamma, "RDP failure probability");
  cmd_release->add_option("--in", release.in, "Dataset CSV (bin)")->required();
  cmd_release->add_option("--out", release.out, "Histogram CSV to write")->required();
  cmd_release->add_option("--k", release.k, "Bin count (else read from the file)");
  cmd_release->add_option("--seed", release.seed, "Random seed");
  cmd_release->add_flag("--no-project", release.no_project,
                        "Write the raw noisy vector instead of projecting");
  cmd_release->callback([&] {
    action = [&] { return CmdRelease(release, out, err); };
  });

  ExperimentConfig exp1;
  CommonFlags exp1_flags;
  auto* cmd_exp1 = app.add_subcommand(
      "experiment-1d", "DP vs RDP loss distribution, k=25 with two occupied cells");
  cmd_exp1->add_option("--k", exp1.k, "Number of cells");
  AddExperimentFlags(cmd_exp1, exp1, exp1_flags);
  cmd_exp1->callback([&] {
    Finish(exp1, exp1_flags);
    action = [&] {
      return CmdExperiment(
          "1d", exp1,
          {"alpha is not stated for the reference figure; default 1.0"}, out);
    };
  });

  ExperimentConfig exp2;
  exp2.k = 400;
  exp2.r = 16;
  exp2.n = 4000;
  exp2.gamma = 0.5;
  CommonFlags exp2_flags;
  auto* cmd_exp2 = app.add_subcommand(
      "experiment-2d", "DP vs RDP loss distribution, 20x20 grid with 16 occupied cells");
  cmd_exp2->add_option("--k", exp2.k, "Number of cells (row-major grid)");
  AddExperimentFlags(cmd_exp2, exp2, exp2_flags);
  cmd_exp2->callback([&] {
    Finish(exp2, exp2_flags);
    action = [&] {
      return CmdExperiment(
          "2d", exp2,
          {"alpha is not stated for the reference figure; default 1.0",
           "n defaults to 4000 (not stated for the reference figure) so that "
           "2k <= gamma*n holds with k=400, gamma=0.5"},
          out);
    };
  });

  ExperimentConfig verify;
  verify.trials = 10000;
  CommonFlags verify_flags;
  auto* cmd_verify = app.add_subcommand(
      "verify", "Monte Carlo estimate of the RDP failure probability gamma");
  cmd_verify->add_option("--k", verify.k, "Number of cells");
  AddExperimentFlags(cmd_verify, verify, verify_flags);
  cmd_verify->callback([&] {
    Finish(verify, verify_flags);
    action = [&] { return CmdVerify(verify, out); };
  });

  ExperimentConfig sweep;
  sweep.n = 1000;
  sweep.trials = 2000;
  sweep.mechanisms = {Mechanism::kDp};
  CommonFlags sweep_flags;
  SweepArgs sweep_args;
  auto* cmd_sweep = app.add_subcommand("sweep", "Risk scaling in k or in r");
  cmd_sweep->add_option("--k", sweep_args.k_list,
                        "Comma-separated k grid (or the fixed k with --r)");
  AddExperimentFlags(cmd_sweep, sweep, sweep_flags, /*with_r=*/false);
  cmd_sweep->add_option("--r", sweep_args.r_list,
                        "Comma-separated grid of occupied-cell counts");
  cmd_sweep->add_flag("--equalizer", sweep_args.equalizer,
                      "k=2 risk across every theta = a/n");
  cmd_sweep->callback([&] {
    if (!sweep_args.r_list.empty() && sweep_args.k_list == "5,10,20,40") {
      sweep_args.k_list = "100";
    }
    Finish(sweep, sweep_flags);
    action = [&] { return CmdSweep(sweep, sweep_args, out); };
  });

  ScalarArgs scalar;
  auto* cmd_scalar = app.add_subcommand(
      "scalar-release", "RDP release of a statistic with an empirical sensitivity scale");
  cmd_scalar->set_help_flag("--help", "Print this help message and exit");
  cmd_scalar->add_option("--in", scalar.in, "Sample CSV (x)")->required();
  cmd_scalar->add_option("--stat", scalar.stat, "mean or trimmed-mean");
  cmd_scalar->add_option("--trim", scalar.trim, "Trim fraction per side");
  cmd_scalar->add_option("--h", scalar.h, "Pairwise sensitivity (absdiff)");
  cmd_scalar->add_option("--lo", scalar.lo, "Lower end of the data domain");
  cmd_scalar->add_option("--hi", scalar.hi, "Upper end of the data domain");
  cmd_scalar->add_option("--alpha", scalar.alpha, "Noise parameter alpha");
  cmd_scalar->add_option("--gamma", scalar.gamma,
                         "Target coverage failure gamma2 for calibration");
  cmd_scalar->add_option("--gamma1", scalar.gamma1,
                         "Claimed failure probability of the scale-ratio condition");
  cmd_scalar->add_option("--delta", scalar.delta, "Quantile tail (overrides calibration)");
  cmd_scalar->add_option("--delta-prime", scalar.delta_prime, "Reference tail");
  cmd_scalar->add_option("--beta", scalar.beta, "Log-Lipschitz constant beta");
  cmd_scalar->add_option("--beta-c", scalar.beta_c, "beta = c / sqrt(n) when --beta unset");
  cmd_scalar->add_option("--estimator", scalar.estimator, "split-pair or u-statistic");
  cmd_scalar->add_option("--seed", scalar.seed, "Random seed");
  cmd_scalar->callback([&] { action = [&] { return CmdScalarRelease(scalar, out); }; });

  ExperimentConfig generate;
  generate.mechanisms = {Mechanism::kIdentity};
  CommonFlags generate_flags;
  auto* cmd_generate =
      app.add_subcommand("generate", "Sample a binned dataset from a distribution");
  cmd_generate->add_option("--k", generate.k, "Number of cells");
  AddExperimentFlags(cmd_generate, generate, generate_flags);
  cmd_generate->callback([&] {
    Finish(generate, generate_flags);
    action = [&] { return CmdGenerate(generate, out); };
  });

  SynthesizeArgs synthesize;
  auto* cmd_synth = app.add_subcommand(
      "synthesize", "Draw a synthetic dataset from a released histogram");
  cmd_synth->add_option("--in", synthesize.in, "Histogram CSV (cell,count)")->required();
  cmd_synth->add_option("--out", synthesize.out, "Dataset CSV to write")->required();
  cmd_synth->add_option("--count", synthesize.count, "Number of draws N");
  cmd_synth->add_option("--seed", synthesize.seed, "Random seed");
  cmd_synth->callback([&] { action = [&] { return CmdSynthesize(synthesize, out); }; });

  try {
    const std::vector<std::string> args = ExpandConfig(raw_args);
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      if (e.get_exit_code() == 0) {
        app.exit(e, out, err);
        return 0;
      }
      err << "error: " << e.what() << '\n';
      return 2;
    }
    return action ? action() : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace rdp::cli
