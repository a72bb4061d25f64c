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

namespace quditwalk {

LatticePoint step(LatticePoint point, const PlayerMove& move, int d) {
  if (move.c != 0) point.row = (point.row + 1) % 4;
  switch (point.row) {
    case 0:
      point.pos = mod_d(static_cast<long long>(point.pos) + move.a, d);
      break;
    case 1:
      point.pos = mod_d(static_cast<long long>(point.pos) + move.b, d);
      break;
    case 2:
      point.pos = mod_d(static_cast<long long>(point.pos) - move.a, d);
      break;
    case 3:
      point.pos = mod_d(static_cast<long long>(point.pos) - move.b, d);
      break;
    default:
      throw std::invalid_argument("lattice row out of range");
  }
  return point;
}

QuditState realize(const LatticePoint& point, int d) {
  switch (point.row) {
    case 0:
      return basis_state(d, point.pos);
    case 1:
      return fourier_basis_state(d, point.pos);
    case 2:
      return basis_state(d, mod_d(-static_cast<long long>(point.pos), d));
    case 3:
      return fourier_basis_state(d, mod_d(-static_cast<long long>(point.pos), d));
    default:
      throw std::invalid_argument("lattice row out of range");
  }
}

LatticePoint walk(std::span<const PlayerMove> moves, int d) {
  LatticePoint point;
  for (const PlayerMove& move : moves) point = step(point, move, d);
  return point;
}

std::vector<LatticePoint> walk_trace(std::span<const PlayerMove> moves,
                                     int d) {
  std::vector<LatticePoint> trace;
  trace.reserve(moves.size());
  LatticePoint point;
  for (const PlayerMove& move : moves) {
    point = step(point, move, d);
    trace.push_back(point);
  }
  return trace;
}

bool is_valid(std::span<const PlayerMove> moves) {
  int parity = 0;
  for (const PlayerMove& move : moves) parity ^= (move.c != 0 ? 1 : 0);
  return parity == 0;
}

bool announced_parity_valid(std::span<const int> c_bits) {
  int parity = 0;
  for (int c : c_bits) parity ^= (c != 0 ? 1 : 0);
  return parity == 0;
}

std::optional<int> predict_outcome(std::span<const PlayerMove> moves, int d) {
  if (!is_valid(moves)) return std::nullopt;
  const LatticePoint end = walk(moves, d);
  if (end.row == 0) return end.pos;
  return mod_d(-static_cast<long long>(end.pos), d);
}

ContributionLedger build_ledger(std::span<const int> c_bits) {
  if (!announced_parity_valid(c_bits)) {
    throw std::invalid_argument(
        "ledger undefined for odd rotation parity: the round has no "
        "deterministic outcome to attribute");
  }

  ContributionLedger ledger;
  ledger.entries.reserve(c_bits.size());
  int row = 0;
  for (int c : c_bits) {
    if (c != 0) row = (row + 1) % 4;
    LedgerEntry entry;
    entry.source = (row == 0 || row == 2) ? KeySource::shift : KeySource::phase;
    entry.sign = (row <= 1) ? 1 : -1;
    ledger.entries.push_back(entry);
  }

  // Rows 2 and 3 accumulate pos with flipped sign, and a round ending on
  // row 2 is read out as -pos. Folding that final negation into every sign
  // makes  sum_i sign_i * v_i == m  hold with no trailing correction.
  if (row == 2) {
    for (LedgerEntry& entry : ledger.entries) entry.sign = -entry.sign;
  }

  return ledger;
}

}  // namespace quditwalk
