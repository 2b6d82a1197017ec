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

#include <optional>
#include <string>
#include <vector>

#include "pinch/finite_blocklength.hpp"
#include "pinch/geometry.hpp"

namespace pinch {

/// Default tolerance on the wrapped phase mismatch between neighbours (rad).
inline constexpr double kPhaseTolerance = 1e-9;
/// Bisection stops once the bracket is this narrow (m).
inline constexpr double kPositionTolerance = 1e-13;
/// Samples per interval when the phase is not monotone.
inline constexpr int kDenseScanSamples = 10000;

struct PlacementResult {
  AntennaLayout layout;
  // wrap(psi_{k+1} - psi_k), each in (-pi, pi]; N - 1 entries.
  std::vector<double> phase_residuals;
  bool qos_satisfied = false;
  double snr_achieved = 0.0;
  double rate_nats = 0.0;
  // Non-fatal events, e.g. a search window that had to be widened.
  std::vector<std::string> warnings;
};

/// x + (n - (N + 1) / 2) * delta for n = 1..N: a guard-spaced array centred
/// on the user's x. Maximises sum 1/r_n when phases are ignored.
AntennaLayout closed_form_layout(UserPosition const& user,
                                 SystemParams const& params);

struct Feasibility {
  // C < N P_t alpha^2 / (nu2 sigma^2); necessary for exact_ok.
  bool necessary_ok = false;
  // aligned_snr(closed_form_layout) >= nu2.
  bool exact_ok = false;
  // aligned_snr / nu2 - 1.
  double margin = 0.0;
};

Feasibility feasibility(UserPosition const& user, SystemParams const& params,
                        QosThresholds const& thresholds);

enum class RootPreference { kLowest, kHighest };

/// Finds x in [lo, hi] with |wrap(total_phase(x) - target_phase)| <= tol,
/// the lowest such x by default or the highest with kHighest. Returns
/// nullopt when the interval holds no root.
///
/// When the interval does not contain the feed point the phase is strictly
/// monotone (n_eff > 1 outweighs the free-space slope), so each candidate
/// 2 pi k level is bisected directly. Otherwise the wrapped residual is
/// scanned densely and each sign change is bisected.
std::optional<double> solve_phase_root(
    double lo, double hi, double target_phase, UserPosition const& user,
    SystemParams const& params, double tol = kPhaseTolerance,
    RootPreference preference = RootPreference::kLowest);

/// Per-antenna phase alignment starting from the closed-form layout.
///
/// The centre antenna (index (N+1)/2, or N/2 for even N, 1-based) keeps its
/// closed-form position. A forward pass places each antenna to its right in
/// [prev + delta, prev + 3 delta] and a backward pass each antenna to its
/// left in [next - 3 delta, next - delta], taking the root nearest the
/// guard-spacing end. An empty window is retried once with width 5 delta
/// (recorded in warnings) before AlignmentFailure is thrown.
///
/// An unmet rate target is reported through qos_satisfied, not thrown.
PlacementResult fine_tune(UserPosition const& user, SystemParams const& params,
                          UrllcParams const& urllc,
                          double tol = kPhaseTolerance);

}  // namespace pinch
