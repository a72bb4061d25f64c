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

#include "quditwalk/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "quditwalk/joint.hpp"
#include "quditwalk/qudit.hpp"

namespace quditwalk {

namespace {

void require_moves(const std::vector<PlayerMove>& moves, int n_players,
                   int d) {
  if (static_cast<int>(moves.size()) != n_players) {
    throw std::invalid_argument("expected " + std::to_string(n_players) +
                                " moves, got " +
                                std::to_string(moves.size()));
  }
  for (const PlayerMove& move : moves) {
    if (move.a < 0 || move.a >= d || move.b < 0 || move.b >= d ||
        (move.c != 0 && move.c != 1)) {
      throw std::invalid_argument("move out of range for dimension " +
                                  std::to_string(d));
    }
  }
}

RoundRecord run_round_impl(const ProtocolConfig& config,
                           std::uint64_t round_id,
                           std::vector<PlayerMove> moves, bool draw_moves,
                           const std::vector<LinkInterceptor>& interceptors) {
  const int d = config.d;
  const int n = config.n_players;
  if (static_cast<int>(interceptors.size()) != n - 1) {
    throw std::invalid_argument("expected one interceptor slot per link");
  }

  SplitMix64 rng = SplitMix64::substream(config.seed, round_id);

  if (draw_moves) {
    moves.resize(static_cast<std::size_t>(n));
    for (PlayerMove& move : moves) {
      move.a = rng.uniform_int(d);
      move.b = rng.uniform_int(d);
      move.c = rng.uniform_int(2);
    }
  } else {
    require_moves(moves, n, d);
  }

  RoundRecord record;
  record.round_id = round_id;
  record.moves = std::move(moves);

  // Sequential pass. The carried qudit starts at |0> and is always the last
  // subsystem; interceptors may grow the state but never reorder it.
  JointState channel = to_joint(basis_state(d, 0));
  for (int i = 0; i < n; ++i) {
    const int carried = channel.subsystem_count() - 1;
    const PlayerMove& move = record.moves[static_cast<std::size_t>(i)];
    if (move.c != 0) channel = apply_f_on(channel, carried);
    channel = apply_z_pow_on(channel, carried, move.b);
    channel = apply_x_pow_on(channel, carried, move.a);

    if (i < n - 1 && interceptors[static_cast<std::size_t>(i)]) {
      interceptors[static_cast<std::size_t>(i)](channel, rng, record.attack);
    }
  }

  // The last player measures the carried qudit; whatever the adversary left
  // entangled gets read out afterwards in the fourier basis, once the
  // round's own measurement is done.
  JointMeasurementOutcome measured = measure_subsystem(
      channel, channel.subsystem_count() - 1, Basis::computational, rng);
  record.outcome = measured.value;

  JointState remainder = std::move(measured.post_state);
  for (AncillaRegister& reg : record.attack.ancillas) {
    JointMeasurementOutcome ancilla_read =
        measure_subsystem(remainder, reg.subsystem, Basis::fourier, rng);
    reg.measured_value = ancilla_read.value;
    remainder = std::move(ancilla_read.post_state);
  }

  // Announcement phase: rotation bits go public in a random speaking order.
  record.announced_c.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    record.announced_c[static_cast<std::size_t>(i)] =
        record.moves[static_cast<std::size_t>(i)].c;
  }
  record.announcement_order.resize(static_cast<std::size_t>(n));
  std::iota(record.announcement_order.begin(),
            record.announcement_order.end(), 0);
  rng.shuffle(record.announcement_order.begin(),
              record.announcement_order.end());

  record.valid = announced_parity_valid(record.announced_c);
  record.predicted = predict_outcome(record.moves, d);

  const std::vector<LatticePoint> trace = walk_trace(record.moves, d);
  record.link_rows.reserve(static_cast<std::size_t>(n - 1));
  record.link_positions.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 0; i + 1 < n; ++i) {
    record.link_rows.push_back(trace[static_cast<std::size_t>(i)].row);
    record.link_positions.push_back(trace[static_cast<std::size_t>(i)].pos);
  }

  return record;
}

}  // namespace

RoundRecord run_round(const ProtocolConfig& config, std::uint64_t round_id,
                      const std::vector<LinkInterceptor>& interceptors) {
  return run_round_impl(config, round_id, {}, true, interceptors);
}

RoundRecord run_round_with_moves(
    const ProtocolConfig& config, std::uint64_t round_id,
    std::vector<PlayerMove> moves,
    const std::vector<LinkInterceptor>& interceptors) {
  return run_round_impl(config, round_id, std::move(moves), false,
                        interceptors);
}

std::vector<RoundRecord> run_rounds(const ProtocolConfig& config) {
  validate(config);
  const std::vector<LinkInterceptor> interceptors =
      make_interceptors(config.attack, config.n_players);

  const std::uint64_t rounds = config.rounds;
  std::vector<RoundRecord> records(rounds);

  const std::uint64_t workers = std::min<std::uint64_t>(
      static_cast<std::uint64_t>(config.threads), rounds);
  if (workers <= 1) {
    for (std::uint64_t r = 0; r < rounds; ++r) {
      records[r] = run_round(config, r, interceptors);
    }
    return records;
  }

  // Static contiguous split; every round writes only its own slot, so the
  // result cannot depend on scheduling.
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> failures(workers);
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = rounds * w / workers;
    const std::uint64_t end = rounds * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] {
      try {
        for (std::uint64_t r = begin; r < end; ++r) {
          records[r] = run_round(config, r, interceptors);
        }
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return records;
}

SiftResult sift(std::span<const RoundRecord> records) {
  SiftResult result;
  for (const RoundRecord& record : records) {
    if (record.valid) result.valid.push_back(record);
  }
  if (!records.empty()) {
    result.efficiency = static_cast<double>(result.valid.size()) /
                        static_cast<double>(records.size());
  }
  return result;
}

std::vector<KeyString> assemble_keys(
    std::span<const RoundRecord> valid_records, int d) {
  if (valid_records.empty()) {
    throw std::invalid_argument("no valid rounds to assemble keys from");
  }
  const std::size_t n = valid_records.front().moves.size();

  std::vector<KeyString> keys(n);
  for (std::size_t i = 0; i < n; ++i) {
    keys[i].owner = static_cast<int>(i);
    keys[i].symbols.reserve(valid_records.size());
  }

  for (const RoundRecord& record : valid_records) {
    if (!record.valid) {
      throw std::invalid_argument("round " + std::to_string(record.round_id) +
                                  " is not valid; sift first");
    }
    if (record.moves.size() != n) {
      throw std::invalid_argument("records disagree on player count");
    }

    const ContributionLedger ledger = build_ledger(record.announced_c);
    for (std::size_t i = 0; i < n; ++i) {
      const LedgerEntry& entry = ledger.entries[i];
      const PlayerMove& move = record.moves[i];
      const int amount = (entry.source == KeySource::shift) ? move.a : move.b;
      long long symbol = static_cast<long long>(entry.sign) * amount;
      if (i == n - 1) symbol -= record.outcome;
      keys[i].symbols.push_back(mod_d(symbol, d));
    }
  }
  return keys;
}

namespace {

int column_sum_mod(const std::vector<KeyString>& keys, std::size_t position,
                   int d) {
  long long total = 0;
  for (const KeyString& key : keys) total += key.symbols[position];
  return mod_d(total, d);
}

}  // namespace

VerificationResult verify_positions(const std::vector<KeyString>& keys,
                                    std::span<const RoundRecord> valid_records,
                                    std::size_t count, int d,
                                    double detect_threshold, SplitMix64& rng) {
  if (keys.empty()) {
    throw std::invalid_argument("no keys to verify");
  }
  const std::size_t length = keys.front().symbols.size();
  for (const KeyString& key : keys) {
    if (key.symbols.size() != length) {
      throw std::invalid_argument("key strings have unequal lengths");
    }
  }
  if (count > length) {
    throw std::invalid_argument("cannot open more positions than exist");
  }
  if (!valid_records.empty() && valid_records.size() != length) {
    throw std::invalid_argument("records do not match key length");
  }

  std::vector<std::size_t> positions(length);
  std::iota(positions.begin(), positions.end(), std::size_t{0});
  rng.shuffle(positions.begin(), positions.end());
  positions.resize(count);
  std::sort(positions.begin(), positions.end());

  VerificationResult result;
  result.positions_opened = count;
  result.opened_positions = positions;
  for (std::size_t p : positions) {
    if (column_sum_mod(keys, p, d) != 0) ++result.errors;
    if (!valid_records.empty()) {
      result.opened_round_ids.push_back(valid_records[p].round_id);
    }
  }
  result.error_rate =
      count == 0 ? 0.0
                 : static_cast<double>(result.errors) /
                       static_cast<double>(count);
  result.detected = result.errors > 0 && result.error_rate > detect_threshold;

  std::vector<bool> opened(length, false);
  for (std::size_t p : positions) opened[p] = true;
  result.remaining_keys.resize(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    result.remaining_keys[i].owner = keys[i].owner;
    result.remaining_keys[i].symbols.reserve(length - count);
    for (std::size_t p = 0; p < length; ++p) {
      if (!opened[p]) {
        result.remaining_keys[i].symbols.push_back(keys[i].symbols[p]);
      }
    }
  }

  return result;
}

VerificationResult verify_subsequence(const std::vector<KeyString>& keys,
                                      std::span<const RoundRecord> valid_records,
                                      double check_fraction, int d,
                                      double detect_threshold,
                                      SplitMix64& rng) {
  if (!(check_fraction >= 0.0) || !(check_fraction <= 1.0)) {
    throw std::invalid_argument("check_fraction must lie in [0, 1]");
  }
  const std::size_t length = keys.empty() ? 0 : keys.front().symbols.size();
  const auto count = static_cast<std::size_t>(
      std::llround(check_fraction * static_cast<double>(length)));
  return verify_positions(keys, valid_records, count, d, detect_threshold,
                          rng);
}

std::vector<int> dit_sum(std::span<const int> x, std::span<const int> y,
                         int d) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("dit strings have unequal lengths");
  }
  std::vector<int> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = mod_d(static_cast<long long>(x[i]) + y[i], d);
  }
  return out;
}

std::vector<int> share_secret(std::span<const int> message,
                              const std::vector<KeyString>& keys, int sender,
                              int receiver, int d,
                              std::span<const int> withholding) {
  const int n = static_cast<int>(keys.size());
  if (n < 2) {
    throw std::invalid_argument("secret sharing needs at least two keys");
  }
  if (sender < 0 || sender >= n || receiver < 0 || receiver >= n) {
    throw std::invalid_argument("sender or receiver out of range");
  }
  if (sender == receiver) {
    throw std::invalid_argument("sender and receiver must differ");
  }
  const std::size_t length = keys.front().symbols.size();
  if (message.size() > length) {
    throw std::invalid_argument("message longer than the shared key");
  }
  std::vector<bool> withheld(static_cast<std::size_t>(n), false);
  for (int w : withholding) {
    if (w < 0 || w >= n) {
      throw std::invalid_argument("withholding player out of range");
    }
    if (w == sender) {
      throw std::invalid_argument(
          "the sender's key is folded into the ciphertext and cannot be "
          "withheld");
    }
    withheld[static_cast<std::size_t>(w)] = true;
  }

  // Ciphertext: message masked by the sender's key.
  std::vector<int> recovered(message.size());
  for (std::size_t p = 0; p < message.size(); ++p) {
    long long total = message[p] +
                      keys[static_cast<std::size_t>(sender)].symbols[p];
    for (int j = 0; j < n; ++j) {
      if (j == sender || withheld[static_cast<std::size_t>(j)]) continue;
      total += keys[static_cast<std::size_t>(j)].symbols[p];
    }
    recovered[p] = mod_d(total, d);
  }
  return recovered;
}

}  // namespace quditwalk
