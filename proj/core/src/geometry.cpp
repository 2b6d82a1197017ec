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


#include "pinch/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "pinch/errors.hpp"

namespace pinch {

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

double SystemParams::path_gain() const {
  return light_speed / (4.0 * std::numbers::pi * carrier_hz);
}

void SystemParams::validate() const {
  auto require = [](bool ok, char const* field, char const* bound,
                    double value) {
    if (!ok) {
      throw DomainError(std::string(field) + " must be " + bound + ", got " +
                        std::to_string(value));
    }
  };
  require(carrier_hz > 0.0 && std::isfinite(carrier_hz), "carrier_hz",
          "positive", carrier_hz);
  require(light_speed > 0.0 && std::isfinite(light_speed), "light_speed",
          "positive", light_speed);
  require(height_d > 0.0 && std::isfinite(height_d), "height_d", "positive",
          height_d);
  require(n_eff > 1.0 && std::isfinite(n_eff), "n_eff", "greater than 1",
          n_eff);
  require(min_spacing_delta > 0.0 && std::isfinite(min_spacing_delta),
          "min_spacing_delta", "positive", min_spacing_delta);
  require(noise_power_sigma2 > 0.0 && std::isfinite(noise_power_sigma2),
          "noise_power_sigma2", "positive", noise_power_sigma2);
  require(transmit_power_pt > 0.0 && std::isfinite(transmit_power_pt),
          "transmit_power_pt", "positive", transmit_power_pt);
  require(num_antennas_N >= 1, "num_antennas_N", ">= 1",
          static_cast<double>(num_antennas_N));
  require(std::isfinite(feed_x), "feed_x", "finite", feed_x);
}

double lateral_offset_sq(UserPosition const& user, SystemParams const& params) {
  return user.y * user.y + params.height_d * params.height_d;
}

AntennaLayout::AntennaLayout(std::vector<double> positions, double min_spacing)
    : positions_(std::move(positions)) {
  for (std::size_t n = 1; n < positions_.size(); ++n) {
    double const gap = positions_[n] - positions_[n - 1];
    if (!(gap > 0.0)) {
      throw DomainError("antenna positions must be strictly increasing at " +
                        std::to_string(n));
    }
    if (gap < min_spacing - kSpacingSlack) {
      throw DomainError("antenna gap " + std::to_string(n) + " is " +
                        std::to_string(gap) + " m, below the guard spacing " +
                        std::to_string(min_spacing) + " m");
    }
  }
}

double free_space_distance(double antenna_x, UserPosition const& user,
                           SystemParams const& params) {
  double const dx = antenna_x - user.x;
  return std::sqrt(dx * dx + lateral_offset_sq(user, params));
}

double total_phase(double antenna_x, UserPosition const& user,
                   SystemParams const& params) {
  return 2.0 * std::numbers::pi *
         (free_space_distance(antenna_x, user, params) / params.wavelength() +
          std::abs(antenna_x - params.feed_x) / params.guided_wavelength());
}

double wrap_phase(double radians) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double wrapped = std::remainder(radians, two_pi);  // [-pi, pi]
  if (wrapped <= -std::numbers::pi) wrapped += two_pi;
  return wrapped;
}

ChannelRealization channel_coefficients(AntennaLayout const& layout,
                                        UserPosition const& user,
                                        SystemParams const& params,
                                        PhaseMode mode) {
  ChannelRealization out;
  out.coefficients.reserve(layout.size());
  double const alpha = params.path_gain();
  for (double const x : layout.positions()) {
    double const magnitude = alpha / free_space_distance(x, user, params);
    double const phase =
        mode == PhaseMode::kPhysical ? total_phase(x, user, params) : 0.0;
    out.coefficients.push_back(std::polar(magnitude, -phase));
    out.coherent_sum += out.coefficients.back();
  }
  return out;
}

double snr(ChannelRealization const& channel, SystemParams const& params) {
  auto const n = channel.coefficients.size();
  if (n != static_cast<std::size_t>(params.num_antennas_N)) {
    throw ShapeError("channel has " + std::to_string(n) +
                     " coefficients, expected " +
                     std::to_string(params.num_antennas_N));
  }
  return params.transmit_power_pt /
         (static_cast<double>(n) * params.noise_power_sigma2) *
         std::norm(channel.coherent_sum);
}

double inverse_distance_sum(std::span<double const> positions,
                            UserPosition const& user,
                            SystemParams const& params) {
  double sum = 0.0;
  for (double const x : positions) {
    sum += 1.0 / free_space_distance(x, user, params);
  }
  return sum;
}

double aligned_snr(AntennaLayout const& layout, UserPosition const& user,
                   SystemParams const& params) {
  double const alpha = params.path_gain();
  double const gain = inverse_distance_sum(layout.positions(), user, params);
  return params.transmit_power_pt * alpha * alpha /
         (static_cast<double>(layout.size()) * params.noise_power_sigma2) *
         gain * gain;
}

}  // namespace pinch
