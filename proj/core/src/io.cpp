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


#include "pinch/io.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <type_traits>
#include <string>

#include "json.hpp"
#include "pinch/errors.hpp"

namespace pinch {
namespace {

using nlohmann::json;

// Walks one JSON object, rejecting keys that nobody asked for.
class Section {
 public:
  Section(json const& node, std::string prefix)
      : node_(node), prefix_(std::move(prefix)) {
    if (!node_.is_object()) {
      throw ConfigError(prefix_, prefix_ + " must be an object");
    }
  }

  std::string path(std::string_view key) const {
    return prefix_.empty() ? std::string(key) : prefix_ + "." + std::string(key);
  }

  json const* find(std::string_view key) {
    seen_.emplace(key);
    auto it = node_.find(std::string(key));
    return it == node_.end() ? nullptr : &*it;
  }

  void number(std::string_view key, double& out) {
    if (auto const* v = find(key)) {
      if (!v->is_number()) {
        throw ConfigError(path(key), path(key) + " must be a number");
      }
      out = v->get<double>();
    }
  }

  template <typename Int>
  void integer(std::string_view key, Int& out) {
    if (auto const* v = find(key)) {
      if (!v->is_number_integer()) {
        throw ConfigError(path(key), path(key) + " must be an integer");
      }
      if constexpr (std::is_unsigned_v<Int>) {
        if (!v->is_number_unsigned()) {
          throw ConfigError(path(key), path(key) + " must be non-negative");
        }
      }
      out = v->get<Int>();
    }
  }

  void boolean(std::string_view key, bool& out) {
    if (auto const* v = find(key)) {
      if (!v->is_boolean()) {
        throw ConfigError(path(key), path(key) + " must be true or false");
      }
      out = v->get<bool>();
    }
  }

  void string(std::string_view key, std::string& out) {
    if (auto const* v = find(key)) {
      if (!v->is_string()) {
        throw ConfigError(path(key), path(key) + " must be a string");
      }
      out = v->get<std::string>();
    }
  }

  void reject_unknown() const {
    for (auto const& [key, value] : node_.items()) {
      if (!seen_.contains(key)) {
        throw ConfigError(path(key), "unknown field '" + path(key) + "'");
      }
    }
  }

 private:
  json const& node_;
  std::string prefix_;
  std::set<std::string, std::less<>> seen_;
};

// Re-raises a validation failure as a ConfigError attributed to `field`.
template <typename F>
void validated(std::string const& field, F&& check) {
  try {
    check();
  } catch (DomainError const& e) {
    throw ConfigError(field, field + ": " + e.what());
  }
}

json sweep_point_json(SweepResult const& r, SweepKind kind,
                      std::uint64_t seed) {
  json row;
  row["swept_parameter"] = to_string(kind);
  row["value"] = r.swept_value;
  row["mean_rate_pinching_bpcu"] = r.mean_rate_pinching_bits;
  row["mean_rate_conventional_bpcu"] =
      r.mean_rate_conventional_bits ? json(*r.mean_rate_conventional_bits)
                                    : json(nullptr);
  row["outage_fraction"] = r.outage_fraction;
  row["trials"] = r.trials;
  row["seed"] = seed;
  return row;
}

double in_unit(double nats, RateUnit unit) {
  return unit == RateUnit::kBits ? nats_to_bits(nats) : nats;
}

std::string_view unit_suffix(RateUnit unit) {
  return unit == RateUnit::kBits ? "bpcu" : "npcu";
}

}  // namespace

std::string_view to_string(OutputFormat format) {
  return format == OutputFormat::kCsv ? "csv" : "json";
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw DomainError("output format must be csv or json, got '" +
                    std::string(name) + "'");
}

RunConfig parse_config(std::string_view text) {
  RunConfig config;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    return config;
  }
  json root;
  try {
    root = json::parse(text);
  } catch (json::parse_error const& e) {
    throw ConfigError("", std::string("malformed config: ") + e.what());
  }
  if (root.is_null()) return config;
  Section top(root, "");

  if (auto const* node = top.find("system")) {
    Section s(*node, "system");
    SystemParams& p = config.system;
    s.number("carrier_hz", p.carrier_hz);
    s.number("light_speed", p.light_speed);
    s.number("height_d", p.height_d);
    s.number("n_eff", p.n_eff);
    p.min_spacing_delta = 0.5 * p.light_speed / p.carrier_hz;
    s.number("min_spacing_delta", p.min_spacing_delta);
    s.number("noise_power_sigma2", p.noise_power_sigma2);
    s.number("transmit_power_pt", p.transmit_power_pt);
    s.integer("num_antennas_N", p.num_antennas_N);
    s.number("feed_x", p.feed_x);
    s.reject_unknown();
    validated("system", [&] { p.validate(); });
  }

  if (auto const* node = top.find("urllc")) {
    Section s(*node, "urllc");
    double epsilon = config.urllc.epsilon();
    std::int64_t blocklength = config.urllc.blocklength();
    std::int64_t bits = config.urllc.payload_bits();
    s.number("epsilon", epsilon);
    s.integer("blocklength_l", blocklength);
    s.integer("payload_bits_B", bits);
    s.reject_unknown();
    validated("urllc.epsilon", [&] { (void)config.urllc.with_epsilon(epsilon); });
    validated("urllc.blocklength_l",
              [&] { (void)config.urllc.with_blocklength(blocklength); });
    validated("urllc.payload_bits_B",
              [&] { (void)config.urllc.with_payload_bits(bits); });
    config.urllc = UrllcParams(epsilon, blocklength, bits);
  }

  if (auto const* node = top.find("simulation")) {
    Section s(*node, "simulation");
    SimulationConfig& sim = config.simulation;
    s.number("area_side_d", sim.area_side_d);
    s.integer("num_trials", sim.num_trials);
    s.integer("master_seed", sim.master_seed);
    s.boolean("baseline_enabled", sim.baseline_enabled);
    if (auto const* sweep_node = s.find("sweep")) {
      Section sw(*sweep_node, "simulation.sweep");
      std::string kind(to_string(sim.sweep.kind));
      sw.string("kind", kind);
      validated("simulation.sweep.kind",
                [&] { sim.sweep.kind = parse_sweep_kind(kind); });
      if (auto const* values = sw.find("values")) {
        if (!values->is_array()) {
          throw ConfigError("simulation.sweep.values",
                            "simulation.sweep.values must be an array");
        }
        sim.sweep.values.clear();
        for (auto const& v : *values) {
          if (!v.is_number()) {
            throw ConfigError("simulation.sweep.values",
                              "simulation.sweep.values must hold numbers");
          }
          sim.sweep.values.push_back(v.get<double>());
        }
      }
      sw.reject_unknown();
    }
    s.reject_unknown();
    validated("simulation", [&] { sim.validate(); });
  }

  top.string("output_path", config.output_path);
  std::string format(to_string(config.output_format));
  top.string("output_format", format);
  validated("output_format",
            [&] { config.output_format = parse_output_format(format); });
  top.reject_unknown();
  return config;
}

std::string serialize_config(RunConfig const& config) {
  SystemParams const& p = config.system;
  SimulationConfig const& sim = config.simulation;
  json root;
  root["system"] = {
      {"carrier_hz", p.carrier_hz},
      {"light_speed", p.light_speed},
      {"height_d", p.height_d},
      {"n_eff", p.n_eff},
      {"min_spacing_delta", p.min_spacing_delta},
      {"noise_power_sigma2", p.noise_power_sigma2},
      {"transmit_power_pt", p.transmit_power_pt},
      {"num_antennas_N", p.num_antennas_N},
      {"feed_x", p.feed_x},
  };
  root["urllc"] = {
      {"epsilon", config.urllc.epsilon()},
      {"blocklength_l", config.urllc.blocklength()},
      {"payload_bits_B", config.urllc.payload_bits()},
  };
  root["simulation"] = {
      {"area_side_d", sim.area_side_d},
      {"num_trials", sim.num_trials},
      {"master_seed", sim.master_seed},
      {"baseline_enabled", sim.baseline_enabled},
      {"sweep", {{"kind", to_string(sim.sweep.kind)}, {"values", sim.sweep.values}}},
  };
  root["output_path"] = config.output_path;
  root["output_format"] = to_string(config.output_format);
  return root.dump(2) + "\n";
}

std::string format_sig9(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.9g", value);
  return buffer;
}

std::string sweep_to_csv(std::vector<SweepResult> const& results,
                         SweepKind kind, std::uint64_t seed) {
  std::ostringstream out;
  out << "swept_parameter,value,mean_rate_pinching_bpcu,"
         "mean_rate_conventional_bpcu,outage_fraction,trials,seed\n";
  for (auto const& r : results) {
    out << to_string(kind) << ',' << format_sig9(r.swept_value) << ','
        << format_sig9(r.mean_rate_pinching_bits) << ','
        << (r.mean_rate_conventional_bits
                ? format_sig9(*r.mean_rate_conventional_bits)
                : std::string())
        << ',' << format_sig9(r.outage_fraction) << ',' << r.trials << ','
        << seed << '\n';
  }
  return out.str();
}

std::string sweep_to_json(std::vector<SweepResult> const& results,
                          SweepKind kind, std::uint64_t seed) {
  json rows = json::array();
  for (auto const& r : results) rows.push_back(sweep_point_json(r, kind, seed));
  return rows.dump(2) + "\n";
}

std::string trials_to_json(std::vector<SweepResult> const& results,
                           SweepKind kind) {
  json points = json::array();
  for (auto const& r : results) {
    json trials = json::array();
    for (auto const& t : r.records) {
      json row;
      row["user_x"] = t.user.x;
      row["user_y"] = t.user.y;
      row["rate_pinching_nats"] = t.rate_pinching_nats;
      row["rate_conventional_nats"] = t.rate_conventional_nats
                                          ? json(*t.rate_conventional_nats)
                                          : json(nullptr);
      row["qos_ok"] = t.qos_ok;
      row["feasible"] = t.feasible;
      trials.push_back(std::move(row));
    }
    points.push_back({{"swept_parameter", to_string(kind)},
                      {"value", r.swept_value},
                      {"alignment_failures", r.alignment_failures},
                      {"trials", std::move(trials)}});
  }
  return points.dump(2) + "\n";
}

std::string placement_to_csv(PlacementResult const& result, RateUnit unit) {
  std::ostringstream out;
  out << "field,index,value\n";
  auto const positions = result.layout.positions();
  for (std::size_t n = 0; n < positions.size(); ++n) {
    out << "position_m," << n + 1 << ',' << format_sig9(positions[n]) << '\n';
  }
  for (std::size_t n = 0; n < result.phase_residuals.size(); ++n) {
    out << "phase_residual_rad," << n + 1 << ','
        << format_sig9(result.phase_residuals[n]) << '\n';
  }
  out << "snr_linear,," << format_sig9(result.snr_achieved) << '\n';
  out << "rate_" << unit_suffix(unit) << ",,"
      << format_sig9(in_unit(result.rate_nats, unit)) << '\n';
  out << "qos_satisfied,," << (result.qos_satisfied ? 1 : 0) << '\n';
  return out.str();
}

std::string placement_to_json(PlacementResult const& result,
                              Feasibility const& feasible, RateUnit unit) {
  json root;
  root["positions_m"] = std::vector<double>(result.layout.positions().begin(),
                                            result.layout.positions().end());
  root["phase_residuals_rad"] = result.phase_residuals;
  root["snr_linear"] = result.snr_achieved;
  root[std::string("rate_") + std::string(unit_suffix(unit))] =
      in_unit(result.rate_nats, unit);
  root["qos_satisfied"] = result.qos_satisfied;
  root["feasibility"] = {{"necessary_ok", feasible.necessary_ok},
                         {"exact_ok", feasible.exact_ok},
                         {"margin", feasible.margin}};
  return root.dump(2) + "\n";
}

std::string thresholds_line(UrllcParams const& urllc,
                            QosThresholds const& thresholds) {
  double const target = target_rate_nats(urllc);
  std::ostringstream out;
  out << "tau=" << format_sig9(urllc.tau())
      << " nu0=" << format_sig9(thresholds.nu0)
      << " nu1=" << format_sig9(thresholds.nu1)
      << " nu2=" << format_sig9(thresholds.nu2)
      << " target_nats=" << format_sig9(target)
      << " target_bits=" << format_sig9(nats_to_bits(target)) << '\n';
  return out.str();
}

std::string thresholds_block(UrllcParams const& urllc,
                             QosThresholds const& thresholds, RateUnit unit) {
  double const target = target_rate_nats(urllc);
  char const* unit_name =
      unit == RateUnit::kBits ? "bits/channel use" : "nats/channel use";
  std::ostringstream out;
  out << "epsilon            " << format_sig9(urllc.epsilon()) << '\n'
      << "blocklength        " << urllc.blocklength() << '\n'
      << "payload bits       " << urllc.payload_bits() << '\n'
      << "tau                " << format_sig9(urllc.tau()) << '\n'
      << "nu0 (rate minimum) " << format_sig9(thresholds.nu0) << '\n'
      << "nu1 (rate = 0)     " << format_sig9(thresholds.nu1) << '\n'
      << "nu2 (QoS minimum)  " << format_sig9(thresholds.nu2) << " ("
      << format_sig9(10.0 * std::log10(thresholds.nu2)) << " dB)\n"
      << "target rate        " << format_sig9(in_unit(target, unit)) << ' '
      << unit_name << '\n';
  return out.str();
}

}  // namespace pinch
