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

#ifndef QUDITWALK_LATTICE_HPP_
#define QUDITWALK_LATTICE_HPP_

#include <optional>
#include <span>
#include <vector>

#include "quditwalk/qudit.hpp"

namespace quditwalk {

// One player's move: shift amount a, phase amount b (both mod d), and the
// rotation bit c. Operators are applied rightmost first: rotate if c is set,
// then phase, then shift.
struct PlayerMove {
  int a = 0;
  int b = 0;
  int c = 0;

  friend bool operator==(const PlayerMove&, const PlayerMove&) = default;
};

// Symbolic image of the carried state on a 4 x d torus. Row encodes which of
// the four basis families the state sits in, pos its label:
//   row 0: |pos>            row 1: fourier state pos
//   row 2: |-pos mod d>     row 3: fourier state (-pos mod d)
// A move's rotation bit hops one row down (mod 4); the shift amount walks pos
// forward on row 0 and backward on row 2; the phase amount walks pos forward
// on row 1 and backward on row 3; nothing else moves.
struct LatticePoint {
  int row = 0;
  int pos = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Advances the walker by one move. The row hop happens first, so the shift
// and phase act at the move's post-rotation row; only one of them can change
// pos on any given row, which is why a single switch suffices.
LatticePoint step(LatticePoint point, const PlayerMove& move, int d);

// The concrete state a lattice point stands for.
QuditState realize(const LatticePoint& point, int d);

// Walks all moves from the origin (row 0, pos 0).
LatticePoint walk(std::span<const PlayerMove> moves, int d);

// Walker position after each prefix: trace[i] is the point once player i has
// moved, i.e. the state entering link i.
std::vector<LatticePoint> walk_trace(std::span<const PlayerMove> moves, int d);

// A round is measurable iff the rotation bits have even parity, which lands
// the walker on row 0 or 2.
bool is_valid(std::span<const PlayerMove> moves);
bool announced_parity_valid(std::span<const int> c_bits);

// The deterministic measurement result of a valid round: pos on row 0,
// (-pos) mod d on row 2, nullopt when the round is invalid.
std::optional<int> predict_outcome(std::span<const PlayerMove> moves, int d);

enum class KeySource { shift, phase };

// How one player's secret numbers enter the measured value: which of the two
// (the shift amount a or the phase amount b) contributes, and with what sign.
struct LedgerEntry {
  int sign = 1;  // +1 or -1
  KeySource source = KeySource::shift;

  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

struct ContributionLedger {
  std::vector<LedgerEntry> entries;
};

// Builds the ledger from the public rotation bits alone. For any valid round
// the identity  sum_i sign_i * v_i == m (mod d)  holds exactly, where v_i is
// the entry's source amount from player i's move and m the measured value.
// Throws std::invalid_argument if the parity is odd (no deterministic m
// exists to attribute).
ContributionLedger build_ledger(std::span<const int> c_bits);

}  // namespace quditwalk

#endif  // QUDITWALK_LATTICE_HPP_
