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

namespace pinch {

/// Bessel polynomial B_m(z) = sum_{k=0..m} (m+k)! / (k! (m-k)!) (z/2)^k.
///
/// The coefficients are built by the ratio recurrence, so no factorial is
/// formed. Throws OverflowError if the value itself is not representable and
/// DomainError for m < 0.
double bessel_polynomial(int m, double z);

/// exp(log_scale) * B_m(z), accumulated in the log domain. Finite whenever
/// the scaled result is, even if the scale or the polynomial alone is not.
double scaled_bessel_polynomial(int m, double z, double log_scale);

enum class LambertWMethod {
  kSeries,  // Bessel-polynomial series around iota1.
  kRoot,    // Bisection of the defining equation.
  kAuto,    // Series, falling back to kRoot when it does not converge.
};

struct LambertWResult {
  double value = 0.0;
  LambertWMethod method_used = LambertWMethod::kSeries;
  // Series diagnostics; meaningful when the series ran.
  bool series_converged = false;
  int series_terms = 0;
  double last_term = 0.0;
};

/// Series truncation: stop when a term falls below this magnitude...
inline constexpr double kLambertSeriesTolerance = 1e-14;
/// ...or after this many terms.
inline constexpr int kLambertSeriesMaxTerms = 100;
/// Terms must shrink monotonically past this index.
inline constexpr int kLambertSeriesMonotoneFrom = 10;
/// Bisection width for the root method.
inline constexpr double kLambertRootTolerance = 1e-13;

/// Location of the minimum of h(x) = (x - iota1)(x - iota2) e^x between
/// iota2 and iota1.
double lambert_branch_minimum(double iota1, double iota2);

/// h(x) - mu for h as above.
double lambert_defining_residual(double x, double iota1, double iota2,
                                 double mu);

/// Generalized Lambert W: the root of (x - iota1)(x - iota2) e^x = mu on the
/// branch adjacent to iota1, i.e. in [lambert_branch_minimum, iota1].
///
/// Requires iota1 > iota2 and h(x_min) <= mu <= 0.
///
/// kSeries returns the truncated sum with series_converged = false if the
/// term budget ran out, and throws SeriesDivergence if terms grow after
/// index 10. kRoot throws InfeasibleBranch when mu is outside the branch
/// range. kAuto never throws SeriesDivergence.
LambertWResult generalized_lambert_w(
    double iota1, double iota2, double mu,
    LambertWMethod method = LambertWMethod::kAuto);

}  // namespace pinch
