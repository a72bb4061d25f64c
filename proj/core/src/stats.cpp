// Copyright 2026 The quditwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quditwalk/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace quditwalk {

namespace {

// Lower series: P(a, x) = x^a e^-x / Gamma(a+1) * sum x^k a! / (a+k)!.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  double denom = a;
  for (int k = 0; k < 500; ++k) {
    denom += 1.0;
    term *= x / denom;
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper continued fraction (Lentz), giving Q(a, x) = 1 - P(a, x).
double gamma_q_continued_fraction(double a, double x) {
  const double tiny = std::numeric_limits<double>::min() / 1e-30;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_p(double a, double x) {
  if (!(a > 0.0)) {
    throw std::invalid_argument("gamma shape must be positive");
  }
  if (x < 0.0) {
    throw std::invalid_argument("gamma argument must be nonnegative");
  }
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_continued_fraction(a, x);
}

double chi_square_cdf(double x, int dof) {
  if (dof < 1) {
    throw std::invalid_argument("degrees of freedom must be positive");
  }
  if (x <= 0.0) return 0.0;
  return regularized_gamma_p(0.5 * dof, 0.5 * x);
}

double chi_square_critical(int dof, double significance) {
  if (!(significance > 0.0) || !(significance < 1.0)) {
    throw std::invalid_argument("significance must lie in (0, 1)");
  }
  const double target = 1.0 - significance;

  // Bracket the quantile, then bisect. The CDF is monotone, so 200
  // iterations pin the value far below measurement noise.
  double lo = 0.0;
  double hi = static_cast<double>(dof);
  while (chi_square_cdf(hi, dof) < target) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (chi_square_cdf(mid, dof) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double chi_square_statistic(std::span<const std::uint64_t> histogram) {
  if (histogram.size() < 2) {
    throw std::invalid_argument("histogram needs at least two bins");
  }
  std::uint64_t total = 0;
  for (std::uint64_t count : histogram) total += count;
  if (total == 0) {
    throw std::invalid_argument("histogram is empty");
  }
  const double expected =
      static_cast<double>(total) / static_cast<double>(histogram.size());
  double statistic = 0.0;
  for (std::uint64_t count : histogram) {
    const double diff = static_cast<double>(count) - expected;
    statistic += diff * diff / expected;
  }
  return statistic;
}

ChiSquareResult chi_square_uniformity(std::span<const std::uint64_t> histogram,
                                      double significance) {
  if (histogram.size() < 2) {
    throw std::invalid_argument("histogram needs at least two bins");
  }
  std::uint64_t total = 0;
  for (std::uint64_t count : histogram) total += count;
  if (total < 10 * histogram.size()) {
    throw std::invalid_argument(
        "need at least 10 samples per bin on average, got " +
        std::to_string(total) + " over " + std::to_string(histogram.size()) +
        " bins");
  }

  ChiSquareResult result;
  result.statistic = chi_square_statistic(histogram);
  result.dof = static_cast<int>(histogram.size()) - 1;
  result.significance = significance;
  result.critical = chi_square_critical(result.dof, significance);
  result.samples = total;
  result.pass = result.statistic < result.critical;
  return result;
}

double binomial_sigma(double p, std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("sample count must be positive");
  }
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

}  // namespace quditwalk
