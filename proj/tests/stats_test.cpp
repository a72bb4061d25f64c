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
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "quditwalk/rng.hpp"

using namespace quditwalk;

TEST_SUITE_BEGIN("stats");

TEST_CASE("regularized incomplete gamma against reference values") {
  CHECK(regularized_gamma_p(0.5, 0.0) == 0.0);
  // Closed form at shape 1: 1 - exp(-x).
  CHECK(regularized_gamma_p(1.0, 1.0) ==
        doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
  // Frozen references from an independent implementation.
  CHECK(regularized_gamma_p(2.5, 3.0) ==
        doctest::Approx(0.693781081586721).epsilon(1e-11));
  CHECK(regularized_gamma_p(10.0, 3.0) ==
        doctest::Approx(1.102488130115482e-03).epsilon(1e-10));
  CHECK(regularized_gamma_p(0.5, 0.2) ==
        doctest::Approx(0.472910743134462).epsilon(1e-11));

  CHECK_THROWS_AS(regularized_gamma_p(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(regularized_gamma_p(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("chi-square CDF has the two-dof closed form") {
  for (double x : {0.5, 1.0, 3.0, 10.0}) {
    CHECK(chi_square_cdf(x, 2) ==
          doctest::Approx(1.0 - std::exp(-x / 2.0)).epsilon(1e-12));
  }
  CHECK(chi_square_cdf(0.0, 4) == 0.0);
  CHECK_THROWS_AS(chi_square_cdf(1.0, 0), std::invalid_argument);
}

TEST_CASE("critical values match frozen 0.999 quantiles") {
  // Reference quantiles computed independently and pinned here.
  const std::vector<std::pair<int, double>> references{
      {1, 10.827566170663}, {2, 13.815510557964}, {3, 16.266236196238},
      {4, 18.466826952903}, {7, 24.321886347857}, {9, 27.877164871257},
      {15, 37.697298218354}, {63, 103.442377319873}};
  for (const auto& [dof, expected] : references) {
    CAPTURE(dof);
    CHECK(chi_square_critical(dof, 0.001) ==
          doctest::Approx(expected).epsilon(1e-8));
  }
  CHECK_THROWS_AS(chi_square_critical(3, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(chi_square_critical(3, 1.0), std::invalid_argument);
}

TEST_CASE("the statistic is zero for flat counts and grows with skew") {
  CHECK(chi_square_statistic(std::vector<std::uint64_t>{5, 5, 5, 5}) == 0.0);
  CHECK(chi_square_statistic(std::vector<std::uint64_t>{6, 4}) ==
        doctest::Approx(0.4));
  CHECK_THROWS_AS(chi_square_statistic(std::vector<std::uint64_t>{5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(chi_square_statistic(std::vector<std::uint64_t>{0, 0}),
                  std::invalid_argument);
}

TEST_CASE("uniformity test accepts uniform draws and rejects skewed ones") {
  SplitMix64 rng(13);
  std::vector<std::uint64_t> histogram(6, 0);
  for (int t = 0; t < 6000; ++t) {
    histogram[static_cast<std::size_t>(rng.uniform_int(6))]++;
  }
  const ChiSquareResult uniform = chi_square_uniformity(histogram);
  CHECK(uniform.pass);
  CHECK(uniform.dof == 5);
  CHECK(uniform.samples == 6000);

  // A 10% excess on one bin at this sample size is far past the critical
  // value.
  std::vector<std::uint64_t> skewed(6, 1000);
  skewed[0] = 1600;
  skewed[1] = 400;
  const ChiSquareResult biased = chi_square_uniformity(skewed);
  CHECK_FALSE(biased.pass);

  CHECK_THROWS_AS(chi_square_uniformity(std::vector<std::uint64_t>{3, 3, 3}),
                  std::invalid_argument);
}

TEST_CASE("binomial sigma") {
  CHECK(binomial_sigma(0.5, 100) == doctest::Approx(0.05));
  CHECK(binomial_sigma(0.0, 10) == 0.0);
  CHECK_THROWS_AS(binomial_sigma(0.5, 0), std::invalid_argument);
}

TEST_SUITE_END();
