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


#include "pinch/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "pinch/errors.hpp"

namespace pinch {

double bessel_polynomial(int m, double z) {
  if (m < 0) {
    throw DomainError("bessel_polynomial: order must be >= 0, got " +
                      std::to_string(m));
  }
  double term = 1.0;
  double sum = 1.0;
  double const half_z = 0.5 * z;
  for (int k = 0; k < m; ++k) {
    // c_{k+1} / c_k = (m + k + 1)(m - k) / (k + 1)
    term *= static_cast<double>(m + k + 1) * static_cast<double>(m - k) /
            static_cast<double>(k + 1) * half_z;
    sum += term;
    if (!std::isfinite(term) || !std::isfinite(sum)) {
      throw OverflowError("bessel_polynomial: overflow at order " +
                          std::to_string(m) + ", term " +
                          std::to_string(k + 1));
    }
  }
  return sum;
}

double scaled_bessel_polynomial(int m, double z, double log_scale) {
  if (m < 0) {
    throw DomainError("scaled_bessel_polynomial: order must be >= 0, got " +
                      std::to_string(m));
  }
  if (z == 0.0 || m == 0) return std::exp(log_scale);

  double const log_half_z = std::log(std::abs(0.5 * z));
  bool const alternating = z < 0.0;
  std::vector<double> logs(static_cast<std::size_t>(m) + 1);
  logs[0] = log_scale;
  for (int k = 0; k < m; ++k) {
    logs[k + 1] = logs[k] +
                  std::log(static_cast<double>(m + k + 1) *
                           static_cast<double>(m - k) /
                           static_cast<double>(k + 1)) +
                  log_half_z;
  }
  double const peak = *std::max_element(logs.begin(), logs.end());
  double sum = 0.0;
  for (int k = 0; k <= m; ++k) {
    double const magnitude = std::exp(logs[k] - peak);
    sum += (alternating && (k % 2 == 1)) ? -magnitude : magnitude;
  }
  return sum * std::exp(peak);
}

double lambert_branch_minimum(double iota1, double iota2) {
  // h'(x) = e^x (x^2 + (2 - s) x + p - s), s = iota1 + iota2, p = iota1 iota2;
  // the discriminant reduces to 4 + (iota1 - iota2)^2.
  double const s = iota1 + iota2;
  double const gap = iota1 - iota2;
  return 0.5 * (s - 2.0 + std::sqrt(4.0 + gap * gap));
}

double lambert_defining_residual(double x, double iota1, double iota2,
                                 double mu) {
  return (x - iota1) * (x - iota2) * std::exp(x) - mu;
}

namespace {

void require_ordered(double iota1, double iota2) {
  if (!(iota1 > iota2)) {
    throw DomainError("generalized_lambert_w: need iota1 > iota2, got " +
                      std::to_string(iota1) + " <= " + std::to_string(iota2));
  }
}

LambertWResult lambert_by_root(double iota1, double iota2, double mu) {
  double lo = lambert_branch_minimum(iota1, iota2);
  double hi = iota1;
  double const floor_value = lambert_defining_residual(lo, iota1, iota2, 0.0);
  if (!(mu <= 0.0 && mu >= floor_value)) {
    throw InfeasibleBranch(
        "generalized_lambert_w: mu = " + std::to_string(mu) +
        " has no root on the branch [" + std::to_string(lo) + ", " +
        std::to_string(hi) + "]; admissible range is [" +
        std::to_string(floor_value) + ", 0]");
  }
  LambertWResult out;
  out.method_used = LambertWMethod::kRoot;
  if (mu == 0.0) {
    out.value = iota1;
    return out;
  }
  // h is increasing on [lo, hi]: residual(lo) <= 0 <= residual(hi).
  while (hi - lo > kLambertRootTolerance) {
    double const mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double const r = lambert_defining_residual(mid, iota1, iota2, mu);
    if (r == 0.0) {
      lo = hi = mid;
      break;
    }
    (r < 0.0 ? lo : hi) = mid;
  }
  out.value = 0.5 * (lo + hi);
  return out;
}

LambertWResult lambert_by_series(double iota1, double iota2, double mu) {
  LambertWResult out;
  out.method_used = LambertWMethod::kSeries;
  double const width = iota2 - iota1;
  double const ratio = mu * std::exp(-iota1) / width;
  if (ratio == 0.0) {
    out.value = iota1;
    out.series_converged = true;
    return out;
  }
  double const log_ratio = std::log(std::abs(ratio));
  double sum = 0.0;
  double previous = std::numeric_limits<double>::infinity();
  for (int m = 1; m <= kLambertSeriesMaxTerms; ++m) {
    double const md = static_cast<double>(m);
    // (m * ratio)^m / (m * m!) folded into the polynomial's log scale.
    double const log_scale =
        md * (std::log(md) + log_ratio) - std::log(md) - std::lgamma(md + 1.0);
    double term = scaled_bessel_polynomial(m - 1, -2.0 / (md * width),
                                           log_scale);
    if (ratio < 0.0 && m % 2 == 1) term = -term;
    double const magnitude = std::abs(term);
    out.series_terms = m;
    out.last_term = magnitude;
    if (!std::isfinite(term) ||
        (m > kLambertSeriesMonotoneFrom && magnitude > previous)) {
      throw SeriesDivergence(
          "generalized_lambert_w: series diverges at term " +
              std::to_string(m) + " with magnitude " +
              std::to_string(magnitude),
          magnitude);
    }
    sum += term;
    previous = magnitude;
    if (magnitude < kLambertSeriesTolerance) {
      out.series_converged = true;
      break;
    }
  }
  out.value = iota1 - sum;
  return out;
}

}  // namespace

LambertWResult generalized_lambert_w(double iota1, double iota2, double mu,
                                     LambertWMethod method) {
  require_ordered(iota1, iota2);
  switch (method) {
    case LambertWMethod::kSeries:
      return lambert_by_series(iota1, iota2, mu);
    case LambertWMethod::kRoot:
      return lambert_by_root(iota1, iota2, mu);
    case LambertWMethod::kAuto:
      break;
  }
  LambertWResult series;
  try {
    series = lambert_by_series(iota1, iota2, mu);
  } catch (SeriesDivergence const& diverged) {
    LambertWResult root = lambert_by_root(iota1, iota2, mu);
    root.last_term = diverged.last_term();
    return root;
  }
  if (series.series_converged) return series;
  LambertWResult root = lambert_by_root(iota1, iota2, mu);
  root.series_terms = series.series_terms;
  root.last_term = series.last_term;
  return root;
}

}  // namespace pinch
