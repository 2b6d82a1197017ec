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


#include "pinch/finite_blocklength.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pinch/errors.hpp"
#include "pinch/special_functions.hpp"

namespace pinch {
namespace {

constexpr double kSnrFloor = 1e-12;

// Rational approximation of the standard normal quantile (P. J. Acklam),
// relative error about 1.15e-9 over the whole range.
double normal_quantile_estimate(double p) {
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  if (p < p_low) {
    double const q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
            c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p <= 1.0 - p_low) {
    double const q = p - 0.5;
    double const r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r +
            a[5]) *
           q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r +
            1.0);
  }
  double const q = std::sqrt(-2.0 * std::log1p(-p));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
           c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

double normal_density(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

void require_rate_args(double snr, double tau) {
  if (!(snr >= 0.0)) {
    throw DomainError("snr must be non-negative, got " + std::to_string(snr));
  }
  if (!(tau >= 0.0)) {
    throw DomainError("tau must be non-negative, got " + std::to_string(tau));
  }
}

}  // namespace

double q_function(double x) {
  return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double inverse_q(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("inverse_q: probability must lie in (0, 1), got " +
                      std::to_string(p));
  }
  // Newton on the upper tail only; the lower tail follows by symmetry and
  // avoids computing Q(x) ~ 1.
  if (p > 0.5) return -inverse_q(1.0 - p);
  double x = -normal_quantile_estimate(p);
  for (int i = 0; i < 2; ++i) {
    double const density = normal_density(x);
    if (density == 0.0) break;
    x += (q_function(x) - p) / density;
  }
  return x;
}

double achievable_rate(double snr, double tau) {
  require_rate_args(snr, tau);
  if (snr < kSnrFloor) return 0.0;
  double const one_plus = 1.0 + snr;
  // 1 - (1+g)^-2 written as g(2+g)/(1+g)^2 to keep precision at small g.
  double const dispersion = std::sqrt(snr * (2.0 + snr)) / one_plus;
  return std::log1p(snr) - tau * dispersion;
}

double rate_derivative(double snr, double tau) {
  if (!(snr > 0.0)) {
    throw DomainError("rate_derivative: snr must be positive, got " +
                      std::to_string(snr));
  }
  require_rate_args(snr, tau);
  double const one_plus = 1.0 + snr;
  return (1.0 - tau / (one_plus * std::sqrt(snr * (2.0 + snr)))) / one_plus;
}

double stationary_snr(double tau) {
  if (!(tau >= 0.0)) {
    throw DomainError("tau must be non-negative, got " + std::to_string(tau));
  }
  // sqrt(u) - 1 with u = (1 + sqrt(1 + 4 tau^2)) / 2, rearranged to avoid the
  // two cancellations at small tau.
  double const root = std::sqrt(1.0 + 4.0 * tau * tau);
  double const u_minus_one = 2.0 * tau * tau / (root + 1.0);
  return u_minus_one / (std::sqrt(1.0 + u_minus_one) + 1.0);
}

UrllcParams::UrllcParams(double epsilon, std::int64_t blocklength,
                         std::int64_t payload_bits)
    : epsilon_(epsilon), blocklength_(blocklength), payload_bits_(payload_bits) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw DomainError("epsilon must lie in (0, 0.5), got " +
                      std::to_string(epsilon));
  }
  if (blocklength < 1) {
    throw DomainError("blocklength must be >= 1, got " +
                      std::to_string(blocklength));
  }
  if (payload_bits < 1) {
    throw DomainError("payload_bits must be >= 1, got " +
                      std::to_string(payload_bits));
  }
  tau_ = inverse_q(epsilon) / std::sqrt(static_cast<double>(blocklength));
}

UrllcParams UrllcParams::with_epsilon(double epsilon) const {
  return {epsilon, blocklength_, payload_bits_};
}

UrllcParams UrllcParams::with_blocklength(std::int64_t blocklength) const {
  return {epsilon_, blocklength, payload_bits_};
}

UrllcParams UrllcParams::with_payload_bits(std::int64_t payload_bits) const {
  return {epsilon_, blocklength_, payload_bits};
}

double target_rate_nats(UrllcParams const& params) {
  return static_cast<double>(params.payload_bits()) /
         static_cast<double>(params.blocklength()) * kLn2;
}

QosThresholds qos_snr_threshold(UrllcParams const& params) {
  return qos_snr_threshold(params.tau(), target_rate_nats(params));
}

QosThresholds qos_snr_threshold(double tau, double target_rate_nats) {
  if (!(tau >= 0.0)) {
    throw DomainError("tau must be non-negative, got " + std::to_string(tau));
  }
  if (!(target_rate_nats >= 0.0)) {
    throw DomainError("target rate must be non-negative, got " +
                      std::to_string(target_rate_nats));
  }
  if (tau == 0.0) {
    return {0.0, 0.0, std::expm1(target_rate_nats)};
  }
  // Substituting 1 + g = exp(K/2 + beta) into R(g) = beta gives
  // (K - 2 tau)(K + 2 tau) e^K = -4 tau^2 e^{-2 beta}.
  double const iota = 2.0 * tau;
  double const zero_crossing =
      generalized_lambert_w(iota, -iota, -iota * iota).value;
  double const target_crossing =
      generalized_lambert_w(iota, -iota,
                            -iota * iota * std::exp(-2.0 * target_rate_nats))
          .value;
  QosThresholds out;
  out.nu0 = stationary_snr(tau);
  out.nu1 = std::expm1(0.5 * zero_crossing);
  out.nu2 = std::expm1(0.5 * target_crossing + target_rate_nats);
  return out;
}

}  // namespace pinch
