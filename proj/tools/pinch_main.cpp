// Copyright 2026 The pinch Authors
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


// pinch: QoS thresholds, antenna placement and Monte Carlo sweeps from the
// command line. Exit status: 0 success, 1 usage, 2 computation failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pinch/errors.hpp"
#include "pinch/finite_blocklength.hpp"
#include "pinch/io.hpp"
#include "pinch/placement.hpp"
#include "pinch/simulation.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

// Raised for problems the caller can fix by changing flags or config.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonFlags {
  std::string config_path;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<double> epsilon;
  std::optional<std::int64_t> blocklength;
  std::optional<std::int64_t> bits;
  std::optional<int> antennas;
  bool nats = false;
};

struct PlaceFlags {
  double user_x = 0.0;
  double user_y = 0.0;
  double tol = pinch::kPhaseTolerance;
};

struct SweepFlags {
  std::optional<std::string> kind;
  std::vector<double> values;
  std::optional<std::int64_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<double> area;
  unsigned threads = 0;
  std::string dump_trials;
  bool no_baseline = false;
};

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

pinch::RunConfig load_config(CommonFlags const& flags) {
  pinch::RunConfig config;
  if (!flags.config_path.empty()) {
    config = pinch::parse_config(read_file(flags.config_path));
  }
  if (flags.out) config.output_path = *flags.out;
  if (flags.format) config.output_format = pinch::parse_output_format(*flags.format);
  if (flags.epsilon) config.urllc = config.urllc.with_epsilon(*flags.epsilon);
  if (flags.blocklength) {
    config.urllc = config.urllc.with_blocklength(*flags.blocklength);
  }
  if (flags.bits) config.urllc = config.urllc.with_payload_bits(*flags.bits);
  if (flags.antennas) {
    config.system.num_antennas_N = *flags.antennas;
    config.system.validate();
  }
  return config;
}

// Opens the destination before any work so a bad path fails fast.
class Sink {
 public:
  explicit Sink(std::string path) : path_(std::move(path)) {
    if (!path_.empty()) {
      file_.open(path_, std::ios::binary | std::ios::trunc);
      if (!file_) throw IoError("cannot open output file '" + path_ + "' for writing");
    }
  }

  void write(std::string const& text) {
    std::ostream& out = path_.empty() ? std::cout : file_;
    out << text;
    out.flush();
    if (!out) throw IoError("failed writing to '" + (path_.empty() ? "<stdout>" : path_) + "'");
  }

 private:
  std::string path_;
  std::ofstream file_;
};

pinch::RateUnit unit_of(CommonFlags const& flags) {
  return flags.nats ? pinch::RateUnit::kNats : pinch::RateUnit::kBits;
}

void run_thresholds(CommonFlags const& flags) {
  pinch::RunConfig const config = load_config(flags);
  auto const thresholds = pinch::qos_snr_threshold(config.urllc);
  Sink sink(flags.out.value_or(""));
  sink.write(pinch::thresholds_line(config.urllc, thresholds) + "\n" +
             pinch::thresholds_block(config.urllc, thresholds, unit_of(flags)));
}

void run_place(CommonFlags const& flags, PlaceFlags const& place) {
  pinch::RunConfig const config = load_config(flags);
  if (!(place.tol > 0.0)) throw UsageError("--tol must be positive");
  Sink sink(config.output_path);
  pinch::UserPosition const user{place.user_x, place.user_y};
  auto const result = pinch::fine_tune(user, config.system, config.urllc, place.tol);
  for (auto const& warning : result.warnings) std::cerr << "warning: " << warning << '\n';
  auto const unit = unit_of(flags);
  if (config.output_format == pinch::OutputFormat::kJson) {
    auto const f = pinch::feasibility(user, config.system,
                                      pinch::qos_snr_threshold(config.urllc));
    sink.write(pinch::placement_to_json(result, f, unit));
  } else {
    sink.write(pinch::placement_to_csv(result, unit));
  }
}

void run_sweep(CommonFlags const& flags, SweepFlags const& sweep) {
  pinch::RunConfig config = load_config(flags);
  auto& sim = config.simulation;
  if (sweep.kind) sim.sweep.kind = pinch::parse_sweep_kind(*sweep.kind);
  if (!sweep.values.empty()) {
    sim.sweep.values = sweep.values;
  } else if (sweep.kind) {
    throw UsageError("--kind needs --values");
  }
  if (sweep.trials) sim.num_trials = *sweep.trials;
  if (sweep.seed) sim.master_seed = *sweep.seed;
  if (sweep.area) sim.area_side_d = *sweep.area;
  if (sweep.no_baseline) sim.baseline_enabled = false;
  sim.validate();

  Sink sink(config.output_path);
  std::optional<Sink> dump;
  if (!sweep.dump_trials.empty()) dump.emplace(sweep.dump_trials);

  pinch::SweepOptions const options{sweep.threads, dump.has_value()};
  auto const results = pinch::run_sweep(sim, config.system, config.urllc, options);
  for (auto const& r : results) {
    if (r.alignment_failures > 0) {
      std::cerr << "warning: " << r.alignment_failures << " trial(s) at "
                << pinch::to_string(sim.sweep.kind) << " = "
                << pinch::format_sig9(r.swept_value)
                << " failed phase alignment and were excluded\n";
    }
  }
  if (config.output_format == pinch::OutputFormat::kJson) {
    sink.write(pinch::sweep_to_json(results, sim.sweep.kind, sim.master_seed));
  } else {
    sink.write(pinch::sweep_to_csv(results, sim.sweep.kind, sim.master_seed));
  }
  if (dump) dump->write(pinch::trials_to_json(results, sim.sweep.kind));
}

void add_common(CLI::App& cmd, CommonFlags& flags, bool with_output) {
  cmd.add_option("--config", flags.config_path, "JSON config file")
      ->check(CLI::ExistingFile);
  cmd.add_option("--epsilon", flags.epsilon, "Decoding error probability in (0, 0.5)");
  cmd.add_option("--blocklength", flags.blocklength, "Channel uses per block");
  cmd.add_option("--bits", flags.bits, "Payload bits per block");
  cmd.add_flag("--nats", flags.nats, "Report rates in nats instead of bits");
  cmd.add_option("--out", flags.out, "Output file (default: standard output)");
  if (with_output) {
    cmd.add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd.add_option("--antennas", flags.antennas, "Number of pinching antennas")
        ->check(CLI::PositiveNumber);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pinching-antenna placement and short-packet rate analysis"};
  app.require_subcommand(1);

  CommonFlags thresholds_flags;
  auto* thresholds = app.add_subcommand("thresholds", "Print the QoS SNR thresholds");
  add_common(*thresholds, thresholds_flags, false);

  CommonFlags place_flags;
  PlaceFlags place;
  auto* place_cmd = app.add_subcommand("place", "Place the antennas for one user");
  add_common(*place_cmd, place_flags, true);
  place_cmd->add_option("--user-x", place.user_x, "User x coordinate (m)")->required();
  place_cmd->add_option("--user-y", place.user_y, "User y coordinate (m)")->required();
  place_cmd->add_option("--tol", place.tol, "Wrapped phase tolerance (rad)");

  CommonFlags sweep_flags;
  SweepFlags sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a Monte Carlo parameter sweep");
  add_common(*sweep_cmd, sweep_flags, true);
  sweep_cmd->remove_option(sweep_cmd->get_option("--nats"));
  sweep_cmd->add_option("--kind", sweep.kind, "Swept parameter")
      ->check(CLI::IsMember({"power", "blocklength", "area", "antennas"}));
  sweep_cmd->add_option("--values", sweep.values, "Sweep points, space or comma separated")
      ->delimiter(',')
      ->expected(1, -1);
  sweep_cmd->add_option("--trials", sweep.trials, "Users drawn per sweep point")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seed", sweep.seed, "Master seed (64-bit)");
  sweep_cmd->add_option("--area", sweep.area, "Side of the square user region (m)");
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0: all cores)");
  sweep_cmd->add_option("--dump-trials", sweep.dump_trials,
                        "Also write per-trial records as JSON to this file");
  sweep_cmd->add_flag("--no-baseline", sweep.no_baseline,
                      "Skip the conventional-array baseline");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*thresholds) {
      run_thresholds(thresholds_flags);
    } else if (*place_cmd) {
      run_place(place_flags, place);
    } else {
      run_sweep(sweep_flags, sweep);
    }
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (pinch::ConfigError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (pinch::DomainError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (pinch::AlignmentFailure const& e) {
    std::cerr << "error: " << e.what() << " (antenna " << e.index() << ")\n";
    return kExitFailure;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
