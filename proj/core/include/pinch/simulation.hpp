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


#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pinch/finite_blocklength.hpp"
#include "pinch/geometry.hpp"

namespace pinch {

enum class SweepKind { kPower, kBlocklength, kArea, kAntennas };

std::string_view to_string(SweepKind kind);
/// Throws DomainError for an unknown name.
SweepKind parse_sweep_kind(std::string_view name);

struct Sweep {
  SweepKind kind = SweepKind::kPower;
  // dBm for kPower, channel uses for kBlocklength, metres for kArea, antenna
  // count for kAntennas.
  std::vector<double> values = {0, 5, 10, 15, 20, 25, 30, 35, 40};

  friend bool operator==(Sweep const&, Sweep const&) = default;
};

struct SimulationConfig {
  double area_side_d = 10.0;
  std::int64_t num_trials = 1000;
  std::uint64_t master_seed = 1;
  Sweep sweep;
  bool baseline_enabled = true;

  /// Throws DomainError naming the offending field.
  void validate() const;

  friend bool operator==(SimulationConfig const&,
                         SimulationConfig const&) = default;
};

/// Per-trial stream seed: splitmix64 mixing of the three counters, so every
/// trial draws the same numbers regardless of scheduling.
std::uint64_t derive_trial_seed(std::uint64_t master_seed,
                                std::uint64_t sweep_index,
                                std::uint64_t trial_index);

/// Small deterministic generator for one trial. Doubles are formed from the
/// top 53 bits so draws are identical across standard libraries.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64();
  /// Uniform on [0, 1).
  double uniform();

 private:
  std::uint64_t state_;
};

/// x uniform on [0, D], y uniform on [-D/2, D/2]; the feed sits on the x = 0
/// edge of the square.
UserPosition sample_user(RngStream& rng, double area_side_d);

struct TrialRecord {
  UserPosition user;
  double rate_pinching_nats = 0.0;
  std::optional<double> rate_conventional_nats;
  bool qos_ok = false;
  bool feasible = false;
};

struct PinchingOutcome {
  double rate_nats = 0.0;  // clamped at zero
  bool qos_ok = false;
  bool feasible = false;
};

/// Closed-form layout, phase fine-tuning, delivered SNR and rate for one
/// user. Propagates AlignmentFailure.
PinchingOutcome evaluate_pinching(UserPosition const& user,
                                  SystemParams const& params,
                                  UrllcParams const& urllc);
PinchingOutcome evaluate_pinching(UserPosition const& user,
                                  SystemParams const& params,
                                  UrllcParams const& urllc,
                                  QosThresholds const& thresholds);

/// Fixed N-element half-wavelength array centred on the feed, ideally
/// phase-combined under the same power split and path loss. Returns the
/// rate in nats, clamped at zero.
double evaluate_conventional(UserPosition const& user,
                             SystemParams const& params,
                             UrllcParams const& urllc);

/// SNR of the conventional array; exposed for checking.
double conventional_snr(UserPosition const& user, SystemParams const& params);

struct SweepResult {
  double swept_value = 0.0;
  double mean_rate_pinching_bits = 0.0;
  std::optional<double> mean_rate_conventional_bits;
  double outage_fraction = 0.0;
  // Trials that produced a record; failed alignments are excluded.
  std::int64_t trials = 0;
  std::int64_t alignment_failures = 0;
  // Filled only when SweepOptions::keep_records is set.
  std::vector<TrialRecord> records;
};

struct SweepOptions {
  unsigned threads = 0;  // 0: all hardware threads
  bool keep_records = false;
};

/// Runs config.num_trials independent trials per swept value and averages
/// them in trial order. Output is bit-identical for equal inputs at any
/// thread count. Throws AlignmentFailure if every trial of a point fails.
std::vector<SweepResult> run_sweep(SimulationConfig const& config,
                                   SystemParams const& base_params,
                                   UrllcParams const& base_urllc,
                                   SweepOptions const& options = {});

}  // namespace pinch
