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

#include "quditwalk/selftest.hpp"

#include <algorithm>
#include <cmath>

#include "quditwalk/lattice.hpp"
#include "quditwalk/rng.hpp"

namespace quditwalk {

namespace {

Complex inner_product(const QuditState& x, const QuditState& y) {
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < x.amplitudes.size(); ++i) {
    acc += std::conj(x.amplitudes[i]) * y.amplitudes[i];
  }
  return acc;
}

QuditState random_state(int d, SplitMix64& rng) {
  QuditState state;
  state.amplitudes.resize(static_cast<std::size_t>(d));
  double norm_sq = 0.0;
  for (Complex& amp : state.amplitudes) {
    amp = Complex(2.0 * rng.uniform01() - 1.0, 2.0 * rng.uniform01() - 1.0);
    norm_sq += std::norm(amp);
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (Complex& amp : state.amplitudes) amp *= scale;
  return state;
}

// Running worst-deviation accumulator for one named identity.
struct Check {
  CheckResult result;

  explicit Check(std::string name, double tolerance) {
    result.name = std::move(name);
    result.tolerance = tolerance;
  }

  void observe(double deviation) {
    result.worst = std::max(result.worst, deviation);
    ++result.cases;
  }

  void observe_states(const QuditState& expected, const QuditState& actual) {
    double worst = 0.0;
    for (std::size_t i = 0; i < expected.amplitudes.size(); ++i) {
      worst = std::max(worst,
                       std::abs(expected.amplitudes[i] - actual.amplitudes[i]));
    }
    observe(worst);
  }

  CheckResult finish() {
    result.pass = result.worst <= result.tolerance;
    return result;
  }
};

}  // namespace

double phase_aligned_distance(const QuditState& x, const QuditState& y) {
  const Complex ip = inner_product(x, y);
  const double magnitude = std::abs(ip);
  // Orthogonal states: no phase can align them; report the raw distance.
  Complex phase(1.0, 0.0);
  if (magnitude > 1e-15) phase = ip / magnitude;
  double worst = 0.0;
  for (std::size_t i = 0; i < x.amplitudes.size(); ++i) {
    worst = std::max(worst,
                     std::abs(y.amplitudes[i] - phase * x.amplitudes[i]));
  }
  return worst;
}

std::vector<int> default_algebra_dims() {
  return {2, 3, 4, 5, 6, 8, 12, 16, 64};
}

std::vector<CheckResult> algebra_suite(std::span<const int> dims,
                                       double tolerance) {
  Check unitary("fourier_unitary", tolerance);
  Check on_labels("fourier_on_labels", tolerance);
  Check on_fourier("fourier_on_fourier", tolerance);
  Check fourth_power("fourier_fourth_power", tolerance);
  Check inverse("fourier_inverse", tolerance);
  Check shift_action("shift_action", tolerance);
  Check phase_action("phase_action", tolerance);
  Check shift_eigenphase("shift_eigenphase_on_fourier", tolerance);
  Check phase_shifts_fourier("phase_shifts_fourier_label", tolerance);
  Check commutation("weyl_commutation", tolerance);
  Check conjugation("conjugation_shift_to_phase", tolerance);
  Check unbiased("basis_unbiasedness", tolerance);
  Check walker("single_move_walker_match", tolerance);

  for (int d : dims) {
    SplitMix64 rng = SplitMix64::substream(0x414c47u, static_cast<std::uint64_t>(d));

    // Columns of the rotation, reused by several identities below.
    std::vector<QuditState> columns;
    columns.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
      columns.push_back(apply_f(basis_state(d, k)));
    }

    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const Complex gram = inner_product(columns[static_cast<std::size_t>(j)],
                                           columns[static_cast<std::size_t>(k)]);
        const Complex expected = (j == k) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
        unitary.observe(std::abs(gram - expected));
      }
    }

    for (int k = 0; k < d; ++k) {
      on_labels.observe_states(fourier_basis_state(d, k),
                               columns[static_cast<std::size_t>(k)]);
      on_fourier.observe_states(basis_state(d, mod_d(-k, d)),
                                apply_f(fourier_basis_state(d, k)));

      QuditState four = basis_state(d, k);
      for (int t = 0; t < 4; ++t) four = apply_f(four);
      fourth_power.observe_states(basis_state(d, k), four);
    }

    const QuditState probe = random_state(d, rng);
    inverse.observe_states(probe, apply_f_inverse(apply_f(probe)));
    inverse.observe_states(probe, apply_f(apply_f_inverse(probe)));

    for (int a = 0; a < d; ++a) {
      for (int k = 0; k < d; ++k) {
        shift_action.observe_states(basis_state(d, mod_d(k + a, d)),
                                    apply_x_pow(basis_state(d, k), a));
      }
    }

    for (int b = 0; b < d; ++b) {
      for (int k = 0; k < d; ++k) {
        QuditState expected = basis_state(d, k);
        expected.amplitudes[static_cast<std::size_t>(k)] =
            omega_pow(d, static_cast<long long>(k) * b);
        phase_action.observe_states(expected, apply_z_pow(basis_state(d, k), b));
      }
    }

    for (int k = 0; k < d; ++k) {
      // Shift on a fourier state only contributes the eigenphase omega^{-k}.
      QuditState expected = fourier_basis_state(d, k);
      const Complex eigen = omega_pow(d, -k);
      for (Complex& amp : expected.amplitudes) amp *= eigen;
      shift_eigenphase.observe_states(expected,
                                      apply_x_pow(fourier_basis_state(d, k), 1));

      phase_shifts_fourier.observe_states(
          fourier_basis_state(d, mod_d(k + 1, d)),
          apply_z_pow(fourier_basis_state(d, k), 1));
    }

    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        const QuditState left = apply_z_pow(apply_x_pow(probe, a), b);
        QuditState right = apply_x_pow(apply_z_pow(probe, b), a);
        const Complex scale = omega_pow(d, static_cast<long long>(a) * b);
        for (Complex& amp : right.amplitudes) amp *= scale;
        commutation.observe_states(left, right);
      }
    }

    for (int a = 0; a < d; ++a) {
      conjugation.observe_states(
          apply_z_pow(probe, a),
          apply_f(apply_x_pow(apply_f_inverse(probe), a)));
    }

    for (int k = 0; k < d; ++k) {
      const QuditState xi = fourier_basis_state(d, k);
      for (int j = 0; j < d; ++j) {
        unbiased.observe(std::abs(
            std::norm(xi.amplitudes[static_cast<std::size_t>(j)]) - 1.0 / d));
      }
    }

    const int samples_per_row = std::min(d * d, 64);
    for (int row = 0; row < 4; ++row) {
      for (int s = 0; s < samples_per_row; ++s) {
        const LatticePoint point{row, rng.uniform_int(d)};
        const PlayerMove move{rng.uniform_int(d), rng.uniform_int(d),
                              rng.uniform_int(2)};
        QuditState state = realize(point, d);
        if (move.c != 0) state = apply_f(state);
        state = apply_z_pow(state, move.b);
        state = apply_x_pow(state, move.a);
        walker.observe(
            phase_aligned_distance(realize(step(point, move, d), d), state));
      }
    }
  }

  std::vector<CheckResult> results;
  for (Check* check :
       {&unitary, &on_labels, &on_fourier, &fourth_power, &inverse,
        &shift_action, &phase_action, &shift_eigenphase,
        &phase_shifts_fourier, &commutation, &conjugation, &unbiased,
        &walker}) {
    results.push_back(check->finish());
  }
  return results;
}

std::vector<CheckResult> engine_equivalence_suite(std::uint64_t cases,
                                                  std::uint64_t seed,
                                                  int min_d, int max_d,
                                                  int min_players,
                                                  int max_players,
                                                  double tolerance) {
  Check equivalence("statevector_matches_walker", tolerance);
  Check deterministic("valid_rounds_deterministic", tolerance);
  Check uniform("invalid_rounds_uniform", tolerance);
  Check forecast("forecast_matches_peak", 0.0);
  Check ledger_identity("ledger_identity", 0.0);

  for (std::uint64_t t = 0; t < cases; ++t) {
    SplitMix64 rng = SplitMix64::substream(seed, t);
    const int d = min_d + rng.uniform_int(max_d - min_d + 1);
    const int n = min_players + rng.uniform_int(max_players - min_players + 1);

    std::vector<PlayerMove> moves(static_cast<std::size_t>(n));
    std::vector<int> c_bits(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      moves[static_cast<std::size_t>(i)] = PlayerMove{
          rng.uniform_int(d), rng.uniform_int(d), rng.uniform_int(2)};
      c_bits[static_cast<std::size_t>(i)] =
          moves[static_cast<std::size_t>(i)].c;
    }

    QuditState state = basis_state(d, 0);
    LatticePoint point;
    for (const PlayerMove& move : moves) {
      if (move.c != 0) state = apply_f(state);
      state = apply_z_pow(state, move.b);
      state = apply_x_pow(state, move.a);
      point = step(point, move, d);
      equivalence.observe(phase_aligned_distance(realize(point, d), state));
    }

    // Peak probability tells valid and invalid rounds apart: exactly 1 for
    // a deterministic round, exactly 1/d bin weight for an invalid one.
    double peak = 0.0;
    int peak_label = 0;
    for (int k = 0; k < d; ++k) {
      const double p = std::norm(state.amplitudes[static_cast<std::size_t>(k)]);
      if (p > peak) {
        peak = p;
        peak_label = k;
      }
    }

    const std::optional<int> predicted = predict_outcome(moves, d);
    if (is_valid(moves)) {
      deterministic.observe(std::abs(peak - 1.0));
      forecast.observe(predicted.has_value() && *predicted == peak_label ? 0.0
                                                                         : 1.0);

      const ContributionLedger ledger = build_ledger(c_bits);
      long long attributed = 0;
      for (int i = 0; i < n; ++i) {
        const LedgerEntry& entry = ledger.entries[static_cast<std::size_t>(i)];
        const PlayerMove& move = moves[static_cast<std::size_t>(i)];
        attributed += static_cast<long long>(entry.sign) *
                      ((entry.source == KeySource::shift) ? move.a : move.b);
      }
      ledger_identity.observe(mod_d(attributed, d) == *predicted ? 0.0 : 1.0);
    } else {
      double worst = 0.0;
      for (int k = 0; k < d; ++k) {
        worst = std::max(
            worst,
            std::abs(std::norm(state.amplitudes[static_cast<std::size_t>(k)]) -
                     1.0 / d));
      }
      uniform.observe(worst);
      forecast.observe(predicted.has_value() ? 1.0 : 0.0);
    }
  }

  std::vector<CheckResult> results;
  for (Check* check : {&equivalence, &deterministic, &uniform, &forecast,
                       &ledger_identity}) {
    results.push_back(check->finish());
  }
  return results;
}

}  // namespace quditwalk
