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

#include "quditwalk/qudit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace quditwalk {

namespace {

void require_dim(int d) {
  if (d < 2) {
    throw std::invalid_argument("dimension must be at least 2, got " +
                                std::to_string(d));
  }
}

void require_label(int d, int k) {
  if (k < 0 || k >= d) {
    throw std::invalid_argument("label " + std::to_string(k) +
                                " out of range for dimension " +
                                std::to_string(d));
  }
}

// omega^t for t = 0..d-1, shared by the Fourier kernels.
std::vector<Complex> omega_table(int d) {
  std::vector<Complex> table(static_cast<std::size_t>(d));
  for (int t = 0; t < d; ++t) {
    const double angle = 2.0 * std::numbers::pi * t / d;
    table[static_cast<std::size_t>(t)] = Complex(std::cos(angle),
                                                 std::sin(angle));
  }
  return table;
}

}  // namespace

int mod_d(long long x, int d) {
  require_dim(d);
  const long long m = x % d;
  return static_cast<int>(m < 0 ? m + d : m);
}

Complex omega_pow(int d, long long exponent) {
  const int e = mod_d(exponent, d);
  const double angle = 2.0 * std::numbers::pi * e / d;
  return Complex(std::cos(angle), std::sin(angle));
}

double QuditState::norm_sq() const {
  double total = 0.0;
  for (const Complex& amp : amplitudes) total += std::norm(amp);
  return total;
}

bool QuditState::is_normalized(double tol) const {
  return std::abs(norm_sq() - 1.0) <= tol;
}

QuditState basis_state(int d, int k) {
  require_dim(d);
  require_label(d, k);
  QuditState state;
  state.amplitudes.assign(static_cast<std::size_t>(d), Complex(0.0, 0.0));
  state.amplitudes[static_cast<std::size_t>(k)] = Complex(1.0, 0.0);
  return state;
}

QuditState fourier_basis_state(int d, int k) {
  require_dim(d);
  require_label(d, k);
  QuditState state;
  state.amplitudes.resize(static_cast<std::size_t>(d));
  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    state.amplitudes[static_cast<std::size_t>(j)] =
        inv_sqrt_d * omega_pow(d, static_cast<long long>(j) * k);
  }
  return state;
}

QuditState plus_state(int d) { return fourier_basis_state(d, 0); }

QuditState apply_x_pow(const QuditState& state, int a) {
  const int d = state.dim();
  require_dim(d);
  const int shift = mod_d(a, d);
  QuditState out;
  out.amplitudes.resize(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    out.amplitudes[static_cast<std::size_t>(mod_d(k + shift, d))] =
        state.amplitudes[static_cast<std::size_t>(k)];
  }
  return out;
}

QuditState apply_z_pow(const QuditState& state, int b) {
  const int d = state.dim();
  require_dim(d);
  QuditState out;
  out.amplitudes.resize(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    out.amplitudes[static_cast<std::size_t>(k)] =
        omega_pow(d, static_cast<long long>(k) * b) *
        state.amplitudes[static_cast<std::size_t>(k)];
  }
  return out;
}

namespace {

QuditState fourier_kernel(const QuditState& state, bool inverse) {
  const int d = state.dim();
  require_dim(d);
  const std::vector<Complex> table = omega_table(d);
  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
  QuditState out;
  out.amplitudes.assign(static_cast<std::size_t>(d), Complex(0.0, 0.0));
  for (int i = 0; i < d; ++i) {
    Complex acc(0.0, 0.0);
    for (int j = 0; j < d; ++j) {
      // The phase exponent is reduced as an integer, never as an angle.
      const int t = static_cast<int>((static_cast<long long>(i) * j) % d);
      const Complex w = table[static_cast<std::size_t>(t)];
      acc += (inverse ? std::conj(w) : w) *
             state.amplitudes[static_cast<std::size_t>(j)];
    }
    out.amplitudes[static_cast<std::size_t>(i)] = inv_sqrt_d * acc;
  }
  return out;
}

}  // namespace

QuditState apply_f(const QuditState& state) {
  return fourier_kernel(state, false);
}

QuditState apply_f_inverse(const QuditState& state) {
  return fourier_kernel(state, true);
}

MeasurementOutcome measure_computational(const QuditState& state,
                                         SplitMix64& rng) {
  const int d = state.dim();
  require_dim(d);
  const double total = state.norm_sq();
  if (std::abs(total - 1.0) > kMeasureNormTolerance) {
    throw std::runtime_error(
        "refusing to measure an unnormalized state (norm^2 = " +
        std::to_string(total) + ")");
  }

  const double u = rng.uniform01() * total;
  double cumulative = 0.0;
  int value = d - 1;  // fallback guards against rounding at the top end
  for (int k = 0; k < d; ++k) {
    cumulative += std::norm(state.amplitudes[static_cast<std::size_t>(k)]);
    if (u < cumulative) {
      value = k;
      break;
    }
  }

  MeasurementOutcome outcome;
  outcome.value = value;
  outcome.post_state = basis_state(d, value);
  return outcome;
}

}  // namespace quditwalk
