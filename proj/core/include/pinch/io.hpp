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

#include <string>
#include <string_view>
#include <vector>

#include "pinch/finite_blocklength.hpp"
#include "pinch/geometry.hpp"
#include "pinch/placement.hpp"
#include "pinch/simulation.hpp"

namespace pinch {

enum class OutputFormat { kCsv, kJson };

std::string_view to_string(OutputFormat format);
OutputFormat parse_output_format(std::string_view name);

enum class RateUnit { kBits, kNats };

struct RunConfig {
  SystemParams system;
  UrllcParams urllc{1e-5, 256, 256};
  SimulationConfig simulation;
  std::string output_path;  // empty: standard output
  OutputFormat output_format = OutputFormat::kCsv;

  friend bool operator==(RunConfig const&, RunConfig const&) = default;
};

/// Parses a JSON document with optional "system", "urllc" and "simulation"
/// sections plus top-level "output_path" and "output_format". Missing fields
/// keep their defaults; an empty document yields the default configuration.
/// An omitted min_spacing_delta follows the configured wavelength (lambda/2).
///
/// Throws ConfigError naming the field for unknown keys, wrong types and
/// violated bounds.
RunConfig parse_config(std::string_view text);

/// Writes every field explicitly; parse_config(serialize_config(c)) == c.
std::string serialize_config(RunConfig const& config);

/// printf("%.9g").
std::string format_sig9(double value);

/// Header plus one row per sweep point:
/// swept_parameter,value,mean_rate_pinching_bpcu,mean_rate_conventional_bpcu,
/// outage_fraction,trials,seed
std::string sweep_to_csv(std::vector<SweepResult> const& results,
                         SweepKind kind, std::uint64_t seed);
std::string sweep_to_json(std::vector<SweepResult> const& results,
                          SweepKind kind, std::uint64_t seed);

/// Per-trial dump (requires results gathered with keep_records).
std::string trials_to_json(std::vector<SweepResult> const& results,
                           SweepKind kind);

std::string placement_to_csv(PlacementResult const& result, RateUnit unit);
std::string placement_to_json(PlacementResult const& result,
                              Feasibility const& feasible, RateUnit unit);

/// One machine-readable key=value line.
std::string thresholds_line(UrllcParams const& urllc,
                            QosThresholds const& thresholds);
/// Human-readable block with the same content.
std::string thresholds_block(UrllcParams const& urllc,
                             QosThresholds const& thresholds, RateUnit unit);

}  // namespace pinch
