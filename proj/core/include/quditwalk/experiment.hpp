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

#ifndef QUDITWALK_EXPERIMENT_HPP_
#define QUDITWALK_EXPERIMENT_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "quditwalk/config.hpp"
#include "quditwalk/protocol.hpp"
#include "quditwalk/stats.hpp"

namespace quditwalk {

// An empirical rate that always travels with its sample count.
struct RateStat {
  std::uint64_t count = 0;
  std::uint64_t n = 0;

  void add(bool hit) {
    ++n;
    if (hit) ++count;
  }
  double rate() const {
    return n == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(n);
  }
};

// Per-link adversary bookkeeping. The first block fills under
// intercept_resend, the second under cnot_ancilla; either way the mismatch
// rates condition on valid rounds only, because invalid rounds have no
// deterministic outcome to miss.
struct LinkAttackStats {
  int link = -1;

  std::uint64_t intercepts = 0;
  RateStat wrong_basis;           // basis != the basis the segment carried
  RateStat mismatch_right_basis;  // valid rounds, basis matched
  RateStat mismatch_wrong_basis;  // valid rounds, basis missed

  std::uint64_t taps = 0;
  RateStat fourier_usable;    // tapped segment carried a fourier state
  RateStat recovery;          // usable taps that reconstruct the position
  RateStat mismatch_computational;  // valid rounds, tap hit a label state
  RateStat mismatch_fourier;        // valid rounds, tap hit a fourier state
};

struct ExperimentReport {
  ProtocolConfig config;

  std::uint64_t rounds = 0;
  std::uint64_t valid = 0;
  std::uint64_t invalid = 0;
  std::optional<double> efficiency;

  // Lattice-walker forecast vs. state-vector measurement, valid rounds.
  RateStat correlation;

  std::vector<std::uint64_t> invalid_histogram;
  std::optional<ChiSquareResult> invalid_uniformity;

  bool verification_ran = false;
  std::size_t positions_opened = 0;
  std::size_t check_errors = 0;
  double check_error_rate = 0.0;
  bool detected = false;

  std::uint64_t key_players = 0;
  std::uint64_t key_length_sifted = 0;
  std::uint64_t key_length_after_check = 0;
  std::uint64_t zero_sum_violations = 0;

  // Valid-round mismatch rate with the attack active, plus per-link detail.
  RateStat attack_mismatch;
  std::vector<LinkAttackStats> per_link;

  double wall_time_ms = 0.0;
  int threads_used = 1;
};

// Folds finished rounds into a report: sifting, correlation, invalid-outcome
// uniformity (when at least 10 samples per bin exist), key assembly, the
// public verification step, and attack statistics.
ExperimentReport summarize(const ProtocolConfig& config,
                           std::span<const RoundRecord> records,
                           double wall_time_ms);

// run_rounds + summarize with wall-clock timing.
ExperimentReport run_experiment(const ProtocolConfig& config);

// Full report as JSON: {"canonical": ..., "runtime": ...}. Everything under
// "canonical" is a pure function of the config, so two runs with the same
// config agree byte for byte there; "runtime" carries wall time and worker
// count.
std::string report_to_json_text(const ExperimentReport& report);

// Just the canonical object, serialized with sorted keys.
std::string report_canonical_text(const ExperimentReport& report);

// One line per round:
//   round_id,c_parity,valid,predicted,measured,match,attacked_link,attack_flags
// predicted/match are empty on invalid rounds, attacked_link is empty when no
// link was touched. attack_flags is a bitmask: 1 intercepted, 2 wrong-basis
// interception, 4 ancilla attached, 8 tapped segment was fourier-usable.
void write_per_round_csv(std::ostream& out,
                         std::span<const RoundRecord> records);

}  // namespace quditwalk

#endif  // QUDITWALK_EXPERIMENT_HPP_
