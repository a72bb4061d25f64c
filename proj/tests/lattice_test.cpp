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

#include "quditwalk/lattice.hpp"

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "quditwalk/selftest.hpp"
#include "test_helpers.hpp"

using namespace quditwalk;
using quditwalk::testing::check_states_equal;

TEST_SUITE_BEGIN("lattice");

TEST_CASE("step walks forward on the label rows, backward on their mirrors") {
  const int d = 5;
  CHECK(step({0, 0}, {2, 1, 0}, d) == LatticePoint{0, 2});
  CHECK(step({0, 3}, {4, 0, 0}, d) == LatticePoint{0, 2});  // 3 + 4 mod 5
  CHECK(step({1, 1}, {2, 3, 0}, d) == LatticePoint{1, 4});  // phase moves row 1
  CHECK(step({2, 1}, {2, 3, 0}, d) == LatticePoint{2, 4});  // 1 - 2 mod 5
  CHECK(step({3, 0}, {2, 3, 0}, d) == LatticePoint{3, 2});  // 0 - 3 mod 5
}

TEST_CASE("the rotation bit hops a row first, then the move lands there") {
  const int d = 5;
  CHECK(step({0, 2}, {1, 3, 1}, d) == LatticePoint{1, 0});  // row 1: 2 + 3
  CHECK(step({1, 2}, {1, 3, 1}, d) == LatticePoint{2, 1});  // row 2: 2 - 1
  CHECK(step({3, 2}, {1, 3, 1}, d) == LatticePoint{0, 3});  // wraps to row 0
}

TEST_CASE("realize maps each row to its basis family") {
  const int d = 3;
  check_states_equal(realize({0, 2}, d), basis_state(d, 2));
  check_states_equal(realize({1, 1}, d), fourier_basis_state(d, 1));
  check_states_equal(realize({2, 1}, d), basis_state(d, 2));  // -1 mod 3
  check_states_equal(realize({3, 1}, d), fourier_basis_state(d, 2));
  check_states_equal(realize({2, 0}, d), basis_state(d, 0));
}

TEST_CASE("one walker step equals one state-vector move on every row") {
  // realize . step == (shift . phase . maybe-rotate) . realize, up to a
  // global phase. Checked on every row with several dimensions.
  SplitMix64 rng(41);
  for (int d : {2, 3, 5, 8}) {
    for (int row = 0; row < 4; ++row) {
      for (int trial = 0; trial < 32; ++trial) {
        const LatticePoint point{row, rng.uniform_int(d)};
        const PlayerMove move{rng.uniform_int(d), rng.uniform_int(d),
                              rng.uniform_int(2)};
        QuditState state = realize(point, d);
        if (move.c != 0) state = apply_f(state);
        state = apply_z_pow(state, move.b);
        state = apply_x_pow(state, move.a);
        CHECK(phase_aligned_distance(realize(step(point, move, d), d), state) <=
              1e-12);
      }
    }
  }
}

TEST_CASE("walk and walk_trace agree and cover every prefix") {
  const int d = 7;
  const std::vector<PlayerMove> moves{{1, 2, 0}, {3, 1, 1}, {2, 5, 0}, {4, 0, 1}};
  const std::vector<LatticePoint> trace = walk_trace(moves, d);
  REQUIRE(trace.size() == moves.size());
  CHECK(trace.back() == walk(moves, d));

  LatticePoint point;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    point = step(point, moves[i], d);
    CHECK(trace[i] == point);
  }
}

TEST_CASE("validity is the parity of the rotation bits") {
  CHECK(is_valid(std::vector<PlayerMove>{{1, 2, 0}, {3, 1, 0}}));
  CHECK(is_valid(std::vector<PlayerMove>{{1, 2, 1}, {3, 1, 1}}));
  CHECK_FALSE(is_valid(std::vector<PlayerMove>{{1, 2, 1}, {3, 1, 0}}));

  CHECK(announced_parity_valid(std::vector<int>{0, 0, 0}));
  CHECK(announced_parity_valid(std::vector<int>{1, 1, 0}));
  CHECK_FALSE(announced_parity_valid(std::vector<int>{1, 0, 0}));
}

TEST_CASE("predict_outcome on hand-walked rounds") {
  const int d = 5;
  // No rotations: the outcome is the sum of the shifts.
  CHECK(predict_outcome(std::vector<PlayerMove>{{1, 0, 0}, {2, 0, 0}}, d) == 3);
  // Two rotations: ends on row 2 and reads out the negated position.
  // Trace: (row 1, pos 2) after the first move, then (row 2, pos 2-3=-1=4).
  CHECK(predict_outcome(std::vector<PlayerMove>{{1, 2, 1}, {3, 4, 1}}, d) == 1);
  // Odd parity: no deterministic outcome.
  CHECK_FALSE(
      predict_outcome(std::vector<PlayerMove>{{1, 2, 1}, {3, 4, 0}}, d)
          .has_value());
}

TEST_CASE("ledger sources follow the post-rotation row") {
  // Six players, rotations by players 2 and 5.
  const std::vector<int> c1{0, 0, 1, 0, 0, 1};
  const ContributionLedger ledger1 = build_ledger(c1);
  REQUIRE(ledger1.entries.size() == 6);
  const std::vector<KeySource> sources1{KeySource::shift, KeySource::shift,
                                        KeySource::phase, KeySource::phase,
                                        KeySource::phase, KeySource::shift};
  const std::vector<int> signs1{-1, -1, -1, -1, -1, 1};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(ledger1.entries[i].source == sources1[i]);
    CHECK(ledger1.entries[i].sign == signs1[i]);
  }

  // Six players, rotations by players 1 and 4.
  const std::vector<int> c2{0, 1, 0, 0, 1, 0};
  const ContributionLedger ledger2 = build_ledger(c2);
  const std::vector<KeySource> sources2{KeySource::shift, KeySource::phase,
                                        KeySource::phase, KeySource::phase,
                                        KeySource::shift, KeySource::shift};
  const std::vector<int> signs2{-1, -1, -1, -1, 1, 1};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(ledger2.entries[i].source == sources2[i]);
    CHECK(ledger2.entries[i].sign == signs2[i]);
  }

  // No rotations at all: everyone contributes their shift positively.
  const ContributionLedger ledger3 = build_ledger(std::vector<int>{0, 0, 0});
  for (const LedgerEntry& entry : ledger3.entries) {
    CHECK(entry.source == KeySource::shift);
    CHECK(entry.sign == 1);
  }

  CHECK_THROWS_AS(build_ledger(std::vector<int>{1, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("ledger attribution reproduces the walker's outcome") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + rng.uniform_int(9);
    const int n = 2 + rng.uniform_int(6);
    std::vector<PlayerMove> moves;
    std::vector<int> c_bits;
    int parity = 0;
    for (int i = 0; i < n; ++i) {
      moves.push_back({rng.uniform_int(d), rng.uniform_int(d), rng.uniform_int(2)});
      parity ^= moves.back().c;
      c_bits.push_back(moves.back().c);
    }
    if (parity != 0) {
      moves.back().c ^= 1;  // force even parity
      c_bits.back() ^= 1;
    }

    const ContributionLedger ledger = build_ledger(c_bits);
    long long attributed = 0;
    for (int i = 0; i < n; ++i) {
      const LedgerEntry& entry = ledger.entries[static_cast<std::size_t>(i)];
      attributed += static_cast<long long>(entry.sign) *
                    ((entry.source == KeySource::shift)
                         ? moves[static_cast<std::size_t>(i)].a
                         : moves[static_cast<std::size_t>(i)].b);
    }
    CHECK(mod_d(attributed, d) == predict_outcome(moves, d).value());
  }
}

TEST_SUITE_END();
