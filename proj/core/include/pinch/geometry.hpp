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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace pinch {

inline constexpr double kSpeedOfLight = 299792458.0;

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

/// Physical constants of the waveguide-fed link. Defaults are the 28 GHz
/// indoor setup: 3 m height, -90 dBm noise, 20 dBm transmit power, five
/// antennas, half-wavelength guard spacing, feed at the origin.
struct SystemParams {
  double carrier_hz = 28e9;
  double light_speed = kSpeedOfLight;
  double height_d = 3.0;
  double n_eff = 1.4;
  double min_spacing_delta = kSpeedOfLight / 28e9 / 2.0;
  double noise_power_sigma2 = 1e-12;
  double transmit_power_pt = 0.1;
  int num_antennas_N = 5;
  double feed_x = 0.0;

  /// Free-space wavelength c / f_c.
  double wavelength() const { return light_speed / carrier_hz; }
  /// Guided wavelength inside the dielectric, wavelength / n_eff.
  double guided_wavelength() const { return wavelength() / n_eff; }
  /// Propagation constant c / (4 pi f_c).
  double path_gain() const;

  /// Throws DomainError naming the first violated field.
  void validate() const;

  friend bool operator==(SystemParams const&, SystemParams const&) = default;
};

struct UserPosition {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(UserPosition const&, UserPosition const&) = default;
};

/// y^2 + d^2: squared distance from the user to the waveguide axis.
double lateral_offset_sq(UserPosition const& user, SystemParams const& params);

/// Antenna x-coordinates along the waveguide, strictly increasing with every
/// gap at least the guard spacing (1e-12 m slack).
class AntennaLayout {
 public:
  AntennaLayout() = default;
  /// Throws DomainError if the ordering or spacing invariant fails.
  AntennaLayout(std::vector<double> positions, double min_spacing);

  std::span<double const> positions() const noexcept { return positions_; }
  std::size_t size() const noexcept { return positions_.size(); }
  double operator[](std::size_t i) const { return positions_[i]; }

  friend bool operator==(AntennaLayout const&, AntennaLayout const&) = default;

 private:
  std::vector<double> positions_;
};

inline constexpr double kSpacingSlack = 1e-12;

struct ChannelRealization {
  std::vector<std::complex<double>> coefficients;
  std::complex<double> coherent_sum;
};

enum class PhaseMode {
  kPhysical,
  kForcedAligned,  // every psi_n = 0; isolates the path-loss magnitudes
};

/// Euclidean distance from the antenna at (antenna_x, 0, d) to the user.
double free_space_distance(double antenna_x, UserPosition const& user,
                           SystemParams const& params);

/// Free-space plus in-waveguide phase, 2 pi (r / lambda + |x - feed| /
/// lambda_g). Not reduced modulo 2 pi.
double total_phase(double antenna_x, UserPosition const& user,
                   SystemParams const& params);

/// Wraps an angle into (-pi, pi].
double wrap_phase(double radians);

/// a_n = (alpha / r_n) exp(-j psi_n) and their sum.
ChannelRealization channel_coefficients(
    AntennaLayout const& layout, UserPosition const& user,
    SystemParams const& params, PhaseMode mode = PhaseMode::kPhysical);

/// P_t / (N sigma^2) |sum a_n|^2. Throws ShapeError unless the channel has
/// params.num_antennas_N coefficients.
double snr(ChannelRealization const& channel, SystemParams const& params);

/// SNR under perfect phase alignment, P_t alpha^2 / (N sigma^2) (sum 1/r_n)^2.
/// An upper bound on snr() for the same layout.
double aligned_snr(AntennaLayout const& layout, UserPosition const& user,
                   SystemParams const& params);

/// sum 1/r_n, the placement objective.
double inverse_distance_sum(std::span<double const> positions,
                            UserPosition const& user,
                            SystemParams const& params);

}  // namespace pinch
