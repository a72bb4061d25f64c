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

#ifndef QUDITWALK_PROTOCOL_HPP_
#define QUDITWALK_PROTOCOL_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "quditwalk/adversary.hpp"
#include "quditwalk/config.hpp"
#include "quditwalk/lattice.hpp"
#include "quditwalk/rng.hpp"

namespace quditwalk {

// Full trace of one round. Everything here is reproducible from
// (config, round_id) alone: the round's randomness is a dedicated substream.
// The moves' a and b stay secret in-protocol; only the rotation bits are
// announced.
struct RoundRecord {
  std::uint64_t round_id = 0;
  std::vector<PlayerMove> moves;
  std::vector<int> announced_c;         // indexed by player
  std::vector<int> announcement_order;  // randomized speaking order
  bool valid = false;
  std::optional<int> predicted;  // lattice-walker forecast, valid rounds only
  int outcome = 0;               // the state-vector measurement
  // Walker truth entering each link, kept for attack bookkeeping.
  std::vector<int> link_rows;
  std::vector<int> link_positions;
  RoundAttackLog attack;
};

struct KeyString {
  int owner = -1;
  std::vector<int> symbols;
};

// Plays one round: random moves, sequential channel pass with interceptors,
// computational measurement by the last player, fourier readout of any
// attacker ancillas, then the public announcement phase.
RoundRecord run_round(const ProtocolConfig& config, std::uint64_t round_id,
                      const std::vector<LinkInterceptor>& interceptors);

// Same pipeline with the moves pinned by the caller (tests and single-round
// inspection). Randomness still comes from the (seed, round_id) substream.
RoundRecord run_round_with_moves(const ProtocolConfig& config,
                                 std::uint64_t round_id,
                                 std::vector<PlayerMove> moves,
                                 const std::vector<LinkInterceptor>& interceptors);

// All rounds of an experiment, in round_id order. Honors config.threads;
// results are bit-identical for any worker count because every round owns
// its substream and lands in a pre-assigned slot.
std::vector<RoundRecord> run_rounds(const ProtocolConfig& config);

struct SiftResult {
  std::vector<RoundRecord> valid;
  // Fraction of rounds kept; nullopt when no rounds were played.
  std::optional<double> efficiency;
};

// Keeps the rounds whose announced rotation bits have even parity.
SiftResult sift(std::span<const RoundRecord> records);

// One key symbol per player per valid round. Player i contributes their
// ledger source amount times the ledger sign; the last player folds the
// measured value in (subtracting it), which makes every position of the
// key table sum to zero mod d. Throws std::invalid_argument on any invalid
// record.
std::vector<KeyString> assemble_keys(std::span<const RoundRecord> valid_records,
                                     int d);

struct VerificationResult {
  std::size_t positions_opened = 0;
  std::size_t errors = 0;  // opened positions whose symbols missed zero-sum
  double error_rate = 0.0;
  bool detected = false;
  std::vector<std::size_t> opened_positions;
  std::vector<std::uint64_t> opened_round_ids;
  std::vector<KeyString> remaining_keys;
};

// Publicly opens `count` uniformly chosen key positions, compares them
// against the zero-sum identity mod d, and returns the surviving key
// material. Detection fires when the opened error rate exceeds the threshold
// (with at least one error). Pass the records the keys were assembled from so
// the sacrificed round ids can be reported; an empty span skips that
// bookkeeping.
VerificationResult verify_positions(const std::vector<KeyString>& keys,
                                    std::span<const RoundRecord> valid_records,
                                    std::size_t count, int d,
                                    double detect_threshold, SplitMix64& rng);

// Fraction-of-length convenience wrapper around verify_positions.
VerificationResult verify_subsequence(const std::vector<KeyString>& keys,
                                      std::span<const RoundRecord> valid_records,
                                      double check_fraction, int d,
                                      double detect_threshold, SplitMix64& rng);

// Dit-wise (x + y) mod d; the one-time-pad primitive for the key tables.
std::vector<int> dit_sum(std::span<const int> x, std::span<const int> y, int d);

// Sends `message` from `sender`: the ciphertext is message + sender key, and
// the receiver adds every other player's key (their own included) to recover
// it. Keys listed in `withholding` are left out of the recovery sum, so a
// single withheld key turns recovery into a per-position 1/d guessing game.
// The message must not outrun the key length.
std::vector<int> share_secret(std::span<const int> message,
                              const std::vector<KeyString>& keys, int sender,
                              int receiver, int d,
                              std::span<const int> withholding = {});

}  // namespace quditwalk

#endif  // QUDITWALK_PROTOCOL_HPP_
