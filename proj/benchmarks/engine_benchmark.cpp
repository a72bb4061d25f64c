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

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "quditwalk/experiment.hpp"
#include "quditwalk/joint.hpp"
#include "quditwalk/lattice.hpp"
#include "quditwalk/protocol.hpp"
#include "quditwalk/qudit.hpp"

namespace {

using namespace quditwalk;

// One full channel pass over a single qudit: F^c then Z^b then X^a per
// player, no measurement.
void BM_ChannelPass(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int players = static_cast<int>(state.range(1));
  SplitMix64 rng(42);
  std::vector<PlayerMove> moves(players);
  for (PlayerMove& move : moves) {
    move = PlayerMove{rng.uniform_int(d), rng.uniform_int(d),
                      rng.uniform_int(2)};
  }
  for (auto _ : state) {
    QuditState carried = basis_state(d, 0);
    for (const PlayerMove& move : moves) {
      for (int i = 0; i < move.c; ++i) apply_f(carried);
      apply_z_pow(carried, move.b);
      apply_x_pow(carried, move.a);
    }
    benchmark::DoNotOptimize(carried.amplitudes.data());
  }
  state.SetItemsProcessed(state.iterations() * players);
}

// The symbolic engine on the same move sequences.
void BM_LatticeWalk(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int players = static_cast<int>(state.range(1));
  SplitMix64 rng(42);
  std::vector<PlayerMove> moves(players);
  for (PlayerMove& move : moves) {
    move = PlayerMove{rng.uniform_int(d), rng.uniform_int(d),
                      rng.uniform_int(2)};
  }
  for (auto _ : state) {
    LatticePoint point = walk(moves, d);
    benchmark::DoNotOptimize(point);
  }
  state.SetItemsProcessed(state.iterations() * players);
}

// A complete honest round: moves, channel, measurement, announcements.
void BM_Round(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int players = static_cast<int>(state.range(1));
  ProtocolConfig config;
  config.d = d;
  config.n_players = players;
  config.rounds = 1;
  config.seed = 7;
  const auto interceptors = make_interceptors(config.attack, config.n_players);
  std::uint64_t round_id = 0;
  for (auto _ : state) {
    RoundRecord record = run_round(config, round_id++, interceptors);
    benchmark::DoNotOptimize(record.outcome);
  }
}

// A round under the entangling tap, which grows the state to d^2.
void BM_RoundWithTap(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  ProtocolConfig config;
  config.d = d;
  config.n_players = 4;
  config.rounds = 1;
  config.seed = 7;
  config.attack.kind = AttackKind::cnot_ancilla;
  config.attack.coalition = {2};
  const auto interceptors = make_interceptors(config.attack, config.n_players);
  std::uint64_t round_id = 0;
  for (auto _ : state) {
    RoundRecord record = run_round(config, round_id++, interceptors);
    benchmark::DoNotOptimize(record.outcome);
  }
}

BENCHMARK(BM_ChannelPass)->Args({3, 6})->Args({16, 6})->Args({64, 6});
BENCHMARK(BM_LatticeWalk)->Args({3, 6})->Args({64, 6})->Args({64, 64});
BENCHMARK(BM_Round)->Args({2, 3})->Args({3, 6})->Args({10, 6})->Args({64, 4});
BENCHMARK(BM_RoundWithTap)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
