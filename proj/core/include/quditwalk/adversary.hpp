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

#ifndef QUDITWALK_ADVERSARY_HPP_
#define QUDITWALK_ADVERSARY_HPP_

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "quditwalk/joint.hpp"
#include "quditwalk/lattice.hpp"
#include "quditwalk/qudit.hpp"
#include "quditwalk/rng.hpp"

namespace quditwalk {

enum class AttackKind { none, intercept_resend, cnot_ancilla };

enum class BasisPolicy { always_computational, always_fourier, uniform_random };

// What the adversary does and where. Link i is the channel segment between
// player i and player i+1, so an N+1-player round has links 0..N-1.
//   - intercept_resend uses `links` and `basis_policy`;
//   - cnot_ancilla uses `coalition`: each listed player taps the link just
//     before themselves (member p attacks link p-1), so they can combine the
//     tap with their own later view of the round.
struct AttackDescriptor {
  AttackKind kind = AttackKind::none;
  std::vector<int> links;
  BasisPolicy basis_policy = BasisPolicy::uniform_random;
  std::vector<int> coalition;
};

struct InterceptResult {
  QuditState resent;
  int observed = 0;
  Basis basis = Basis::computational;
};

// Measures the carried qudit in the basis the policy picks (a fresh coin per
// call for uniform_random) and forwards the collapsed state.
InterceptResult intercept_resend(const QuditState& carried, BasisPolicy policy,
                                 SplitMix64& rng);

// A tap the adversary keeps: one ancilla entangled with the channel.
// `subsystem` indexes into the round's joint state and stays valid for the
// whole round because new subsystems are only ever appended after earlier
// ancillas and before the carried qudit.
struct AncillaRegister {
  int owner = -1;  // coalition member who installed the tap
  int link = -1;   // channel segment that was tapped
  int subsystem = -1;
  std::optional<int> measured_value;
};

// Entangles a fresh uniform-superposition ancilla with the carried qudit via
// the sum gate (ancilla as control) and leaves the ancilla in the channel
// state. The carried qudit must be the last subsystem; the ancilla is
// inserted just before it.
AncillaRegister attach_cnot_ancilla(JointState& channel, int owner, int link);

// Single-qudit convenience: returns the two-subsystem state (ancilla first)
// plus its register.
std::pair<JointState, AncillaRegister> attach_cnot_ancilla(
    const QuditState& carried);

struct InterceptEvent {
  int link = -1;
  Basis basis = Basis::computational;
  int observed = 0;
};

// Everything the adversary did and learned during one round.
struct RoundAttackLog {
  std::vector<InterceptEvent> intercepts;
  std::vector<AncillaRegister> ancillas;
};

// Hook invoked on the channel between two players. Interceptors see only the
// in-flight state plus randomness; rotation bits are announced after the
// round, so nothing basis-dependent can be decided here.
using LinkInterceptor =
    std::function<void(JointState& channel, SplitMix64& rng,
                       RoundAttackLog& log)>;

// One (possibly empty) interceptor per link, built from the descriptor.
// Throws std::invalid_argument for out-of-range or duplicate links and
// coalition members (member 0 has no preceding link and is rejected).
std::vector<LinkInterceptor> make_interceptors(const AttackDescriptor& attack,
                                               int n_players);

// The coalition's reading of one tap after all public announcements.
struct LinkGuess {
  int link = -1;
  bool usable = false;  // true iff the tapped segment carried a fourier state
  int ancilla_value = 0;
  // Reconstructed walker position entering the tapped link (usable taps
  // only), and the position after the owner's own move.
  std::optional<int> position;
  std::optional<int> position_after_owner;
};

struct CoalitionGuess {
  std::vector<LinkGuess> links;
};

// Classical post-processing with exactly the information the coalition holds:
// measured ancilla values, the public rotation bits, and the members' own
// moves. own_moves maps player index to that player's move for every
// coalition member.
CoalitionGuess coalition_guess(
    const std::vector<AncillaRegister>& ancillas,
    std::span<const int> announced_c,
    const std::vector<std::pair<int, PlayerMove>>& own_moves, int d);

}  // namespace quditwalk

#endif  // QUDITWALK_ADVERSARY_HPP_
