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

#include "quditwalk/adversary.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace quditwalk;
using quditwalk::testing::check_joint;
using quditwalk::testing::check_states_equal;
using quditwalk::testing::tensor;

TEST_SUITE_BEGIN("adversary");

TEST_CASE("right-basis interception observes the label and resends intact") {
  SplitMix64 rng(21);
  for (int k = 0; k < 4; ++k) {
    const InterceptResult r = intercept_resend(
        basis_state(4, k), BasisPolicy::always_computational, rng);
    CHECK(r.observed == k);
    CHECK(r.basis == Basis::computational);
    check_states_equal(r.resent, basis_state(4, k));
  }
  for (int k = 0; k < 4; ++k) {
    const InterceptResult r = intercept_resend(
        fourier_basis_state(4, k), BasisPolicy::always_fourier, rng);
    CHECK(r.observed == k);
    CHECK(r.basis == Basis::fourier);
    check_states_equal(r.resent, fourier_basis_state(4, k));
  }
}

TEST_CASE("wrong-basis interception collapses to a random label") {
  SplitMix64 rng(22);
  const int d = 2;
  int ones = 0;
  const int trials = 2000;
  for (int t = 0; t < trials; ++t) {
    const InterceptResult r = intercept_resend(
        fourier_basis_state(d, 0), BasisPolicy::always_computational, rng);
    ones += r.observed;
    // The forwarded state is a label state now, not the fourier original.
    check_states_equal(r.resent, basis_state(d, r.observed));
  }
  const double band = 5.0 * std::sqrt(trials * 0.25);
  CHECK(std::abs(ones - trials / 2.0) <= band);
}

TEST_CASE("uniform policy picks each basis half the time") {
  SplitMix64 rng(23);
  int fourier = 0;
  const int trials = 2000;
  for (int t = 0; t < trials; ++t) {
    const InterceptResult r =
        intercept_resend(basis_state(2, 0), BasisPolicy::uniform_random, rng);
    fourier += (r.basis == Basis::fourier) ? 1 : 0;
  }
  const double band = 5.0 * std::sqrt(trials * 0.25);
  CHECK(std::abs(fourier - trials / 2.0) <= band);
}

TEST_CASE("tapping a label state leaves a fully correlated pair") {
  const int d = 4;
  const int q = 3;
  auto [state, reg] = attach_cnot_ancilla(basis_state(d, q));
  CHECK(reg.subsystem == 0);
  CHECK_FALSE(reg.measured_value.has_value());
  std::vector<Complex> expected(16, Complex(0, 0));
  const double t = 0.5;
  for (int i = 0; i < d; ++i) {
    expected[static_cast<std::size_t>(i * d + (q + i) % d)] = Complex(t, 0);
  }
  check_joint(state, expected);
}

TEST_CASE("tapping a fourier state stays a product and flips the tap label") {
  for (int d : {2, 3, 5}) {
    for (int q = 0; q < d; ++q) {
      auto [state, reg] = attach_cnot_ancilla(fourier_basis_state(d, q));
      (void)reg;
      check_joint(state, tensor(fourier_basis_state(d, mod_d(-q, d)),
                                fourier_basis_state(d, q)));
    }
  }
}

TEST_CASE("in-channel taps stack before the carried qudit") {
  JointState channel = to_joint(basis_state(2, 1));
  const AncillaRegister first = attach_cnot_ancilla(channel, 1, 0);
  CHECK(first.subsystem == 0);
  CHECK(channel.dims == std::vector<int>{2, 2});
  const AncillaRegister second = attach_cnot_ancilla(channel, 2, 1);
  CHECK(second.subsystem == 1);
  CHECK(channel.dims == std::vector<int>{2, 2, 2});
  CHECK(channel.is_normalized());
}

TEST_CASE("interceptor construction validates the descriptor") {
  AttackDescriptor attack;
  attack.kind = AttackKind::none;
  const auto none = make_interceptors(attack, 4);
  REQUIRE(none.size() == 3);
  for (const LinkInterceptor& hook : none) CHECK_FALSE(static_cast<bool>(hook));

  attack.kind = AttackKind::intercept_resend;
  attack.links = {1};
  const auto taps = make_interceptors(attack, 4);
  CHECK_FALSE(static_cast<bool>(taps[0]));
  CHECK(static_cast<bool>(taps[1]));
  CHECK_FALSE(static_cast<bool>(taps[2]));

  attack.links = {3};
  CHECK_THROWS_AS(make_interceptors(attack, 4), std::invalid_argument);
  attack.links = {1, 1};
  CHECK_THROWS_AS(make_interceptors(attack, 4), std::invalid_argument);

  attack = AttackDescriptor{};
  attack.kind = AttackKind::cnot_ancilla;
  attack.coalition = {0};
  CHECK_THROWS_AS(make_interceptors(attack, 4), std::invalid_argument);
  attack.coalition = {2};
  const auto coalition = make_interceptors(attack, 4);
  CHECK(static_cast<bool>(coalition[1]));
  CHECK_FALSE(static_cast<bool>(coalition[0]));
}

TEST_CASE("coalition reading recovers positions on fourier rows only") {
  const int d = 5;

  SUBCASE("link carrying a fourier state with the plain label") {
    // Rotation by player 0 puts link 0 on row 1, carrying pos as its label.
    const int pos = 3;
    AncillaRegister reg;
    reg.owner = 1;
    reg.link = 0;
    reg.subsystem = 0;
    reg.measured_value = mod_d(-pos, d);  // readout is the negated label

    const std::vector<int> announced{1, 0, 1};  // rows at links: 1, 1
    const PlayerMove own{2, 4, 0};
    const CoalitionGuess guess =
        coalition_guess({reg}, announced, {{1, own}}, d);
    REQUIRE(guess.links.size() == 1);
    CHECK(guess.links[0].usable);
    CHECK(guess.links[0].position == pos);
    // Row 1 advances by the phase amount: 3 + 4 = 7 = 2 mod 5.
    CHECK(guess.links[0].position_after_owner == 2);
  }

  SUBCASE("link carrying a fourier state with the negated label") {
    // Three rotations by players 0..2 walk the row to 3 at link 2.
    const int pos = 3;  // carried label is then -pos = 2
    AncillaRegister reg;
    reg.owner = 3;
    reg.link = 2;
    reg.subsystem = 0;
    reg.measured_value = pos;  // readout negates the carried label: -(-pos)

    const std::vector<int> announced{1, 1, 1, 1};
    const CoalitionGuess guess =
        coalition_guess({reg}, announced, {{3, PlayerMove{1, 2, 0}}}, d);
    CHECK(guess.links[0].usable);
    CHECK(guess.links[0].position == pos);
    // Row 3 walks backward by the phase amount: 3 - 2 = 1.
    CHECK(guess.links[0].position_after_owner == 1);
  }

  SUBCASE("label-row taps are unusable") {
    AncillaRegister reg;
    reg.owner = 1;
    reg.link = 0;
    reg.subsystem = 0;
    reg.measured_value = 2;

    const std::vector<int> announced{0, 0, 0};  // link 0 stays on row 0
    const CoalitionGuess guess = coalition_guess({reg}, announced, {}, d);
    CHECK_FALSE(guess.links[0].usable);
    CHECK_FALSE(guess.links[0].position.has_value());
  }

  SUBCASE("unmeasured ancillas and missing moves are rejected") {
    AncillaRegister reg;
    reg.owner = 1;
    reg.link = 0;
    reg.subsystem = 0;
    const std::vector<int> announced{1, 0, 1};
    CHECK_THROWS_AS(coalition_guess({reg}, announced, {}, d),
                    std::invalid_argument);
    reg.measured_value = 0;
    CHECK_THROWS_AS(coalition_guess({reg}, announced, {}, d),
                    std::invalid_argument);
  }
}

TEST_SUITE_END();
