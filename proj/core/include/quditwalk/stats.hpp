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

#ifndef QUDITWALK_STATS_HPP_
#define QUDITWALK_STATS_HPP_

#include <cstdint>
#include <span>

namespace quditwalk {

// Regularized lower incomplete gamma P(a, x), the chi-square CDF workhorse.
// Series expansion for x < a + 1, continued fraction otherwise; accurate to
// ~1e-12 over the ranges used here.
double regularized_gamma_p(double a, double x);

// Chi-square CDF with `dof` degrees of freedom.
double chi_square_cdf(double x, int dof);

// Upper-tail critical value: the x with P(X > x) = significance, found by
// bisection on the CDF.
double chi_square_critical(int dof, double significance);

// Pearson statistic of a histogram against the uniform expectation.
double chi_square_statistic(std::span<const std::uint64_t> histogram);

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double critical = 0.0;
  double significance = 0.0;
  std::uint64_t samples = 0;
  bool pass = false;  // statistic below the critical value
};

// Uniformity test over the histogram's bins. Throws std::invalid_argument
// when the histogram has fewer than two bins or fewer than 10 samples per
// bin on average (the asymptotic test is meaningless there).
ChiSquareResult chi_square_uniformity(std::span<const std::uint64_t> histogram,
                                      double significance = 0.001);

// Standard deviation of an empirical rate: sqrt(p * (1 - p) / n).
double binomial_sigma(double p, std::uint64_t n);

}  // namespace quditwalk

#endif  // QUDITWALK_STATS_HPP_
