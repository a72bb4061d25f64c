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

#ifndef QUDITWALK_SELFTEST_HPP_
#define QUDITWALK_SELFTEST_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "quditwalk/qudit.hpp"

namespace quditwalk {

struct CheckResult {
  std::string name;
  bool pass = false;
  double worst = 0.0;  // largest deviation seen across all cases
  double tolerance = 0.0;
  std::uint64_t cases = 0;
};

// Smallest e^{i theta}-aligned max-amplitude distance between two states:
// zero iff they are equal up to a global phase.
double phase_aligned_distance(const QuditState& x, const QuditState& y);

// Dimensions the operator-algebra suite runs over by default.
std::vector<int> default_algebra_dims();

// Exhaustive operator identities per dimension: unitarity, the basis images
// of the three operators, fourth-power and inverse identities, the
// commutation and conjugation relations, basis unbiasedness, and agreement
// of one symbolic walker step with one state-vector move on every row.
std::vector<CheckResult> algebra_suite(std::span<const int> dims,
                                       double tolerance = 1e-12);

// Randomized whole-round cross-check of the two engines: plays `cases`
// random move sequences, compares the state-vector result against the
// walker's forecast after every single move, and checks that valid rounds
// are deterministic, invalid rounds exactly uniform, and the contribution
// ledger identity holds.
std::vector<CheckResult> engine_equivalence_suite(std::uint64_t cases,
                                                  std::uint64_t seed,
                                                  int min_d = 2, int max_d = 12,
                                                  int min_players = 2,
                                                  int max_players = 10,
                                                  double tolerance = 1e-9);

}  // namespace quditwalk

#endif  // QUDITWALK_SELFTEST_HPP_
