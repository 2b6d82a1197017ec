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

namespace pinch {

// Finite-blocklength rate model for a single AWGN link.
//
// All rates are in nats per channel use. Convert with nats_to_bits() at the
// point where a value leaves the library.

/// Gaussian tail probability Q(x) = P[N(0,1) > x].
double q_function(double x);

/// Inverse of q_function on (0, 1). Relative error below 1e-12.
/// Throws DomainError outside the open unit interval.
double inverse_q(double p);

/// ln(1 + snr) - tau * sqrt(1 - (1 + snr)^-2).
/// Returns exactly 0 for snr < 1e-12. Throws DomainError for negative snr or
/// tau.
double achievable_rate(double snr, double tau);

/// d/dsnr of achievable_rate. Negative below stationary_snr(tau), positive
/// above it. Throws DomainError for snr <= 0.
double rate_derivative(double snr, double tau);

/// The SNR where rate_derivative vanishes (the minimum of the rate curve).
double stationary_snr(double tau);

inline constexpr double kLn2 = 0.693147180559945309417232121458176568;

inline double nats_to_bits(double nats) { return nats / kLn2; }
inline double bits_to_nats(double bits) { return bits * kLn2; }

/// Reliability and latency requirement of one packet: error probability,
/// blocklength in channel uses and payload in bits.
///
/// Immutable; the dispersion coefficient tau = inverse_q(epsilon)/sqrt(l) is
/// fixed at construction. Use the with_* functions to derive a modified copy.
class UrllcParams {
 public:
  /// Throws DomainError unless 0 < epsilon < 0.5, blocklength >= 1 and
  /// payload_bits >= 1.
  UrllcParams(double epsilon, std::int64_t blocklength,
              std::int64_t payload_bits);

  double epsilon() const noexcept { return epsilon_; }
  std::int64_t blocklength() const noexcept { return blocklength_; }
  std::int64_t payload_bits() const noexcept { return payload_bits_; }
  double tau() const noexcept { return tau_; }

  UrllcParams with_epsilon(double epsilon) const;
  UrllcParams with_blocklength(std::int64_t blocklength) const;
  UrllcParams with_payload_bits(std::int64_t payload_bits) const;

  friend bool operator==(UrllcParams const&, UrllcParams const&) = default;

 private:
  double epsilon_;
  std::int64_t blocklength_;
  std::int64_t payload_bits_;
  double tau_;
};

/// SNR thresholds of the rate curve for a fixed tau.
///   nu0: minimum of the rate curve.
///   nu1: the positive SNR where the rate returns to zero.
///   nu2: the smallest SNR meeting the payload target; for any SNR above it
///        the rate requirement holds.
/// 0 < nu0 < nu1 < nu2 whenever tau > 0.
struct QosThresholds {
  double nu0 = 0.0;
  double nu1 = 0.0;
  double nu2 = 0.0;
};

/// (B / l) * ln 2.
double target_rate_nats(UrllcParams const& params);

QosThresholds qos_snr_threshold(UrllcParams const& params);

/// Thresholds for an explicit tau >= 0 and target rate >= 0. At tau = 0 the
/// curve is the Shannon rate and nu2 = exp(target) - 1.
QosThresholds qos_snr_threshold(double tau, double target_rate_nats);

}  // namespace pinch
