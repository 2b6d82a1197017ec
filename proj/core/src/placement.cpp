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


#include "pinch/placement.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "pinch/errors.hpp"

namespace pinch {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Bisects f on [lo, hi] given f(lo) and f(hi) of opposite sign.
template <typename F>
double bisect(F const& f, double lo, double hi, double f_lo) {
  while (hi - lo > kPositionTolerance) {
    double const mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double const f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

class PhaseProblem {
 public:
  PhaseProblem(double target, UserPosition const& user,
               SystemParams const& params, double tol)
      : target_(target), user_(user), params_(params), tol_(tol) {}

  double phase(double x) const { return total_phase(x, user_, params_); }
  double residual(double x) const { return wrap_phase(phase(x) - target_); }
  bool accepts(double x) const { return std::abs(residual(x)) <= tol_; }

  std::optional<double> monotone(double lo, double hi,
                                 RootPreference preference) const {
    double const p_lo = phase(lo);
    double const p_hi = phase(hi);
    bool const increasing = p_hi > p_lo;
    bool const want_low_x = preference == RootPreference::kLowest;
    // The level closest to the preferred end in phase order.
    double const anchor = want_low_x ? p_lo : p_hi;
    bool const round_up = increasing == want_low_x;
    double const turns = (anchor - target_) / kTwoPi;
    double const k = round_up ? std::ceil(turns) : std::floor(turns);
    double const level = target_ + kTwoPi * k;

    auto const f = [&](double x) { return phase(x) - level; };
    double const f_lo = f(lo);
    double const f_hi = f(hi);
    if ((f_lo < 0.0) != (f_hi < 0.0) && f_lo != 0.0) {
      double const root = bisect(f, lo, hi, f_lo);
      if (accepts(root)) return root;
    }
    // The level sits on an endpoint up to rounding.
    double const first = want_low_x ? lo : hi;
    double const second = want_low_x ? hi : lo;
    if (accepts(first)) return first;
    if (accepts(second)) return second;
    return std::nullopt;
  }

  std::optional<double> scanned(double lo, double hi,
                                RootPreference preference) const {
    int const samples = kDenseScanSamples;
    auto const at = [&](int i) {
      return lo + (hi - lo) * static_cast<double>(i) / samples;
    };
    auto const f = [&](double x) { return residual(x); };
    bool const ascending = preference == RootPreference::kLowest;
    int i = ascending ? 0 : samples;
    int const step = ascending ? 1 : -1;
    double x_prev = at(i);
    double w_prev = f(x_prev);
    if (std::abs(w_prev) <= tol_) return x_prev;
    for (int n = 0; n < samples; ++n) {
      i += step;
      double const x = at(i);
      double const w = f(x);
      if (std::abs(w) <= tol_) return x;
      // A jump of ~2 pi is the wrap, not a crossing.
      if ((w < 0.0) != (w_prev < 0.0) && std::abs(w - w_prev) < std::numbers::pi) {
        double const a = ascending ? x_prev : x;
        double const b = ascending ? x : x_prev;
        double const root = bisect(f, a, b, f(a));
        if (accepts(root)) return root;
      }
      x_prev = x;
      w_prev = w;
    }
    return std::nullopt;
  }

 private:
  double target_;
  UserPosition user_;
  SystemParams const& params_;
  double tol_;
};

}  // namespace

AntennaLayout closed_form_layout(UserPosition const& user,
                                 SystemParams const& params) {
  int const count = params.num_antennas_N;
  std::vector<double> positions;
  positions.reserve(static_cast<std::size_t>(count));
  double const centre = 0.5 * static_cast<double>(count + 1);
  for (int n = 1; n <= count; ++n) {
    positions.push_back(user.x +
                        (static_cast<double>(n) - centre) *
                            params.min_spacing_delta);
  }
  return AntennaLayout(std::move(positions), params.min_spacing_delta);
}

Feasibility feasibility(UserPosition const& user, SystemParams const& params,
                        QosThresholds const& thresholds) {
  double const alpha = params.path_gain();
  double const lateral = lateral_offset_sq(user, params);
  Feasibility out;
  out.necessary_ok = lateral < static_cast<double>(params.num_antennas_N) *
                                   params.transmit_power_pt * alpha * alpha /
                                   (thresholds.nu2 * params.noise_power_sigma2);
  double const best = aligned_snr(closed_form_layout(user, params), user, params);
  out.exact_ok = best >= thresholds.nu2;
  out.margin = best / thresholds.nu2 - 1.0;
  return out;
}

std::optional<double> solve_phase_root(double lo, double hi,
                                       double target_phase,
                                       UserPosition const& user,
                                       SystemParams const& params, double tol,
                                       RootPreference preference) {
  if (!(hi > lo)) {
    throw DomainError("solve_phase_root: empty interval [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  if (!(tol > 0.0)) {
    throw DomainError("solve_phase_root: tolerance must be positive");
  }
  PhaseProblem const problem(target_phase, user, params, tol);
  bool const straddles_feed = lo < params.feed_x && params.feed_x < hi;
  return straddles_feed ? problem.scanned(lo, hi, preference)
                        : problem.monotone(lo, hi, preference);
}

PlacementResult fine_tune(UserPosition const& user, SystemParams const& params,
                          UrllcParams const& urllc, double tol) {
  params.validate();
  if (!(tol > 0.0)) {
    throw DomainError("fine_tune: tolerance must be positive");
  }
  auto const count = static_cast<std::size_t>(params.num_antennas_N);
  double const delta = params.min_spacing_delta;
  AntennaLayout const initial = closed_form_layout(user, params);
  std::vector<double> x(initial.positions().begin(), initial.positions().end());
  // Remark for even N: the anchor is antenna N/2 (1-based).
  std::size_t const anchor = (count % 2 == 1) ? (count - 1) / 2 : count / 2 - 1;

  PlacementResult out;
  auto const place = [&](std::size_t n, double neighbour, bool forward) {
    double const target = total_phase(neighbour, user, params);
    auto const preference =
        forward ? RootPreference::kLowest : RootPreference::kHighest;
    double const lo = forward ? neighbour + delta : neighbour - 3.0 * delta;
    double const hi = forward ? neighbour + 3.0 * delta : neighbour - delta;
    if (auto root = solve_phase_root(lo, hi, target, user, params, tol,
                                     preference)) {
      return *root;
    }
    out.warnings.push_back("antenna " + std::to_string(n + 1) +
                           ": no phase root within 3 delta, widening to 5 delta");
    double const wide_lo = forward ? lo : hi - 5.0 * delta;
    double const wide_hi = forward ? lo + 5.0 * delta : hi;
    if (auto root = solve_phase_root(wide_lo, wide_hi, target, user, params,
                                     tol, preference)) {
      return *root;
    }
    throw AlignmentFailure("fine_tune: no phase-aligned position for antenna " +
                               std::to_string(n + 1),
                           n);
  };

  for (std::size_t n = anchor + 1; n < count; ++n) {
    x[n] = place(n, x[n - 1], true);
  }
  for (std::size_t n = anchor; n-- > 0;) {
    x[n] = place(n, x[n + 1], false);
  }

  for (std::size_t n = 1; n < count; ++n) {
    out.phase_residuals.push_back(wrap_phase(total_phase(x[n], user, params) -
                                             total_phase(x[n - 1], user, params)));
  }
  out.layout = AntennaLayout(std::move(x), delta);
  out.snr_achieved = snr(channel_coefficients(out.layout, user, params), params);
  out.rate_nats = achievable_rate(out.snr_achieved, urllc.tau());
  out.qos_satisfied = out.rate_nats >= target_rate_nats(urllc) - 1e-12;
  return out;
}

}  // namespace pinch
