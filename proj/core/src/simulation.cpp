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


#include "pinch/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "pinch/errors.hpp"
#include "pinch/placement.hpp"

namespace pinch {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool is_count(double v) { return v >= 1.0 && v == std::floor(v) && v < 1e9; }

struct PointSetup {
  SystemParams params;
  UrllcParams urllc;
  double area_side_d;
};

PointSetup setup_point(SimulationConfig const& config,
                       SystemParams const& base_params,
                       UrllcParams const& base_urllc, double value) {
  PointSetup point{base_params, base_urllc, config.area_side_d};
  switch (config.sweep.kind) {
    case SweepKind::kPower:
      point.params.transmit_power_pt = dbm_to_watts(value);
      break;
    case SweepKind::kBlocklength:
      point.urllc = base_urllc.with_blocklength(static_cast<std::int64_t>(value));
      break;
    case SweepKind::kArea:
      point.area_side_d = value;
      break;
    case SweepKind::kAntennas:
      point.params.num_antennas_N = static_cast<int>(value);
      break;
  }
  point.params.validate();
  return point;
}

}  // namespace

std::string_view to_string(SweepKind kind) {
  switch (kind) {
    case SweepKind::kPower:
      return "power";
    case SweepKind::kBlocklength:
      return "blocklength";
    case SweepKind::kArea:
      return "area";
    case SweepKind::kAntennas:
      return "antennas";
  }
  return "unknown";
}

SweepKind parse_sweep_kind(std::string_view name) {
  for (auto kind : {SweepKind::kPower, SweepKind::kBlocklength,
                    SweepKind::kArea, SweepKind::kAntennas}) {
    if (name == to_string(kind)) return kind;
  }
  throw DomainError("sweep kind must be one of power, blocklength, area, "
                    "antennas; got '" + std::string(name) + "'");
}

void SimulationConfig::validate() const {
  if (!(area_side_d > 0.0 && std::isfinite(area_side_d))) {
    throw DomainError("area_side_d must be positive, got " +
                      std::to_string(area_side_d));
  }
  if (num_trials < 1) {
    throw DomainError("num_trials must be >= 1, got " +
                      std::to_string(num_trials));
  }
  auto const& values = sweep.values;
  if (values.empty()) {
    throw DomainError("sweep.values must not be empty");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    double const v = values[i];
    if (!std::isfinite(v)) {
      throw DomainError("sweep.values[" + std::to_string(i) + "] is not finite");
    }
    if (i > 0 && !(v > values[i - 1])) {
      throw DomainError("sweep.values must be strictly increasing at index " +
                        std::to_string(i));
    }
    bool ok = true;
    char const* bound = "";
    switch (sweep.kind) {
      case SweepKind::kPower:
        break;
      case SweepKind::kBlocklength:
      case SweepKind::kAntennas:
        ok = is_count(v);
        bound = "a positive integer";
        break;
      case SweepKind::kArea:
        ok = v > 0.0;
        bound = "positive";
        break;
    }
    if (!ok) {
      throw DomainError("sweep.values[" + std::to_string(i) + "] must be " +
                        bound + " for a " + std::string(to_string(sweep.kind)) +
                        " sweep, got " + std::to_string(v));
    }
  }
}

std::uint64_t derive_trial_seed(std::uint64_t master_seed,
                                std::uint64_t sweep_index,
                                std::uint64_t trial_index) {
  std::uint64_t state = master_seed;
  std::uint64_t mixed = splitmix64(state);
  state = mixed ^ sweep_index;
  mixed = splitmix64(state);
  state = mixed ^ trial_index;
  return splitmix64(state);
}

std::uint64_t RngStream::next_u64() { return splitmix64(state_); }

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

UserPosition sample_user(RngStream& rng, double area_side_d) {
  if (!(area_side_d >= 0.0)) {
    throw DomainError("area side must be non-negative, got " +
                      std::to_string(area_side_d));
  }
  double const u = rng.uniform();
  double const v = rng.uniform();
  return {area_side_d * u, area_side_d * (v - 0.5)};
}

PinchingOutcome evaluate_pinching(UserPosition const& user,
                                  SystemParams const& params,
                                  UrllcParams const& urllc) {
  return evaluate_pinching(user, params, urllc, qos_snr_threshold(urllc));
}

PinchingOutcome evaluate_pinching(UserPosition const& user,
                                  SystemParams const& params,
                                  UrllcParams const& urllc,
                                  QosThresholds const& thresholds) {
  PlacementResult const placed = fine_tune(user, params, urllc);
  PinchingOutcome out;
  out.rate_nats = std::max(placed.rate_nats, 0.0);
  out.qos_ok = placed.qos_satisfied;
  out.feasible = feasibility(user, params, thresholds).exact_ok;
  return out;
}

double conventional_snr(UserPosition const& user, SystemParams const& params) {
  double const spacing = 0.5 * params.wavelength();
  double const centre = 0.5 * static_cast<double>(params.num_antennas_N + 1);
  std::vector<double> positions;
  for (int n = 1; n <= params.num_antennas_N; ++n) {
    positions.push_back(params.feed_x +
                        (static_cast<double>(n) - centre) * spacing);
  }
  return aligned_snr(AntennaLayout(std::move(positions), spacing), user, params);
}

double evaluate_conventional(UserPosition const& user,
                             SystemParams const& params,
                             UrllcParams const& urllc) {
  return std::max(achievable_rate(conventional_snr(user, params), urllc.tau()),
                  0.0);
}

std::vector<SweepResult> run_sweep(SimulationConfig const& config,
                                   SystemParams const& base_params,
                                   UrllcParams const& base_urllc,
                                   SweepOptions const& options) {
  config.validate();
  base_params.validate();
  auto const trials = static_cast<std::size_t>(config.num_trials);
  unsigned threads = options.threads != 0
                         ? options.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, trials));

  std::vector<SweepResult> results;
  results.reserve(config.sweep.values.size());
  for (std::size_t s = 0; s < config.sweep.values.size(); ++s) {
    double const value = config.sweep.values[s];
    PointSetup const point = setup_point(config, base_params, base_urllc, value);
    QosThresholds const thresholds = qos_snr_threshold(point.urllc);

    std::vector<std::optional<TrialRecord>> slots(trials);
    std::vector<std::exception_ptr> errors(trials);
    auto const run_trial = [&](std::size_t t) {
      RngStream rng(derive_trial_seed(config.master_seed, s, t));
      TrialRecord record;
      record.user = sample_user(rng, point.area_side_d);
      try {
        PinchingOutcome const pinching =
            evaluate_pinching(record.user, point.params, point.urllc, thresholds);
        record.rate_pinching_nats = pinching.rate_nats;
        record.qos_ok = pinching.qos_ok;
        record.feasible = pinching.feasible;
      } catch (AlignmentFailure const&) {
        return;
      } catch (...) {
        errors[t] = std::current_exception();
        return;
      }
      if (config.baseline_enabled) {
        record.rate_conventional_nats =
            evaluate_conventional(record.user, point.params, point.urllc);
      }
      slots[t] = std::move(record);
    };
    {
      std::vector<std::jthread> workers;
      for (unsigned w = 0; w < threads; ++w) {
        workers.emplace_back([&, w] {
          for (std::size_t t = w; t < trials; t += threads) run_trial(t);
        });
      }
    }

    for (auto const& error : errors) {
      if (error) std::rethrow_exception(error);
    }

    SweepResult point_result;
    point_result.swept_value = value;
    double pinching_sum = 0.0;
    double conventional_sum = 0.0;
    std::int64_t outages = 0;
    for (auto& slot : slots) {
      if (!slot) {
        ++point_result.alignment_failures;
        continue;
      }
      ++point_result.trials;
      pinching_sum += slot->rate_pinching_nats;
      if (slot->rate_conventional_nats) {
        conventional_sum += *slot->rate_conventional_nats;
      }
      if (!slot->qos_ok) ++outages;
      if (options.keep_records) point_result.records.push_back(*slot);
    }
    if (point_result.trials == 0) {
      throw AlignmentFailure("run_sweep: every trial failed phase alignment at " +
                                 std::string(to_string(config.sweep.kind)) +
                                 " = " + std::to_string(value),
                             0);
    }
    auto const n = static_cast<double>(point_result.trials);
    point_result.mean_rate_pinching_bits = nats_to_bits(pinching_sum / n);
    if (config.baseline_enabled) {
      point_result.mean_rate_conventional_bits =
          nats_to_bits(conventional_sum / n);
    }
    point_result.outage_fraction = static_cast<double>(outages) / n;
    results.push_back(std::move(point_result));
  }
  return results;
}

}  // namespace pinch
