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

#include "quditwalk/joint.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace quditwalk {

namespace {

void require_subsystem(const JointState& state, int which) {
  if (which < 0 || which >= state.subsystem_count()) {
    throw std::invalid_argument("subsystem index " + std::to_string(which) +
                                " out of range for " +
                                std::to_string(state.subsystem_count()) +
                                " subsystems");
  }
}

// Product of dims after `which`: the distance in flat index space between
// consecutive labels of that subsystem.
std::size_t stride_of(const JointState& state, int which) {
  std::size_t stride = 1;
  for (int i = which + 1; i < state.subsystem_count(); ++i) {
    stride *= static_cast<std::size_t>(state.dims[static_cast<std::size_t>(i)]);
  }
  return stride;
}

int digit_of(std::size_t index, std::size_t stride, int dim) {
  return static_cast<int>((index / stride) % static_cast<std::size_t>(dim));
}

}  // namespace

double JointState::norm_sq() const {
  double total = 0.0;
  for (const Complex& amp : amplitudes) total += std::norm(amp);
  return total;
}

bool JointState::is_normalized(double tol) const {
  return std::abs(norm_sq() - 1.0) <= tol;
}

JointState to_joint(const QuditState& state) {
  JointState joint;
  joint.dims = {state.dim()};
  joint.amplitudes = state.amplitudes;
  return joint;
}

JointState insert_subsystem(const JointState& state, int position,
                            const QuditState& inserted) {
  const int n = state.subsystem_count();
  if (position < 0 || position > n) {
    throw std::invalid_argument("insert position " + std::to_string(position) +
                                " out of range");
  }
  const std::size_t d_new = static_cast<std::size_t>(inserted.dim());
  if (state.total_dim() > kJointDimensionCap / d_new) {
    throw std::length_error(
        "joint dimension " + std::to_string(state.total_dim() * d_new) +
        " exceeds cap " + std::to_string(kJointDimensionCap));
  }

  // Flat index decomposes as outer * (block) + inner, where the block is
  // everything at and after `position`.
  std::size_t inner = 1;
  for (int i = position; i < n; ++i) {
    inner *= static_cast<std::size_t>(state.dims[static_cast<std::size_t>(i)]);
  }
  const std::size_t outer = state.total_dim() / inner;

  JointState out;
  out.dims = state.dims;
  out.dims.insert(out.dims.begin() + position, inserted.dim());
  out.amplitudes.assign(state.total_dim() * d_new, Complex(0.0, 0.0));

  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t g = 0; g < d_new; ++g) {
      const Complex scale = inserted.amplitudes[g];
      if (scale == Complex(0.0, 0.0)) continue;
      const std::size_t dst_base = (o * d_new + g) * inner;
      const std::size_t src_base = o * inner;
      for (std::size_t r = 0; r < inner; ++r) {
        out.amplitudes[dst_base + r] = scale * state.amplitudes[src_base + r];
      }
    }
  }
  return out;
}

JointState embed_with_ancilla(const QuditState& ancilla,
                              const QuditState& carried) {
  return insert_subsystem(to_joint(carried), 0, ancilla);
}

JointState apply_cnot_pair(const JointState& state, int control, int target) {
  require_subsystem(state, control);
  require_subsystem(state, target);
  if (control == target) {
    throw std::invalid_argument("control and target must differ");
  }
  const int d = state.dims[static_cast<std::size_t>(control)];
  if (d != state.dims[static_cast<std::size_t>(target)]) {
    throw std::invalid_argument("control and target dimensions differ");
  }

  const std::size_t cs = stride_of(state, control);
  const std::size_t ts = stride_of(state, target);

  JointState out;
  out.dims = state.dims;
  out.amplitudes.assign(state.total_dim(), Complex(0.0, 0.0));
  for (std::size_t idx = 0; idx < state.total_dim(); ++idx) {
    const int gc = digit_of(idx, cs, d);
    const int gt = digit_of(idx, ts, d);
    const int gt_new = mod_d(gt + gc, d);
    const std::size_t dst =
        idx + (static_cast<std::size_t>(gt_new) - static_cast<std::size_t>(gt)) * ts;
    out.amplitudes[dst] = state.amplitudes[idx];
  }
  return out;
}

JointState apply_cnot(const JointState& state) {
  if (state.subsystem_count() != 2) {
    throw std::invalid_argument("apply_cnot expects exactly two subsystems");
  }
  return apply_cnot_pair(state, 0, 1);
}

JointState apply_x_pow_on(const JointState& state, int which, int a) {
  require_subsystem(state, which);
  const int d = state.dims[static_cast<std::size_t>(which)];
  const int shift = mod_d(a, d);
  const std::size_t stride = stride_of(state, which);

  JointState out;
  out.dims = state.dims;
  out.amplitudes.assign(state.total_dim(), Complex(0.0, 0.0));
  for (std::size_t idx = 0; idx < state.total_dim(); ++idx) {
    const int g = digit_of(idx, stride, d);
    const int g_new = mod_d(g + shift, d);
    const std::size_t dst =
        idx + (static_cast<std::size_t>(g_new) - static_cast<std::size_t>(g)) * stride;
    out.amplitudes[dst] = state.amplitudes[idx];
  }
  return out;
}

JointState apply_z_pow_on(const JointState& state, int which, int b) {
  require_subsystem(state, which);
  const int d = state.dims[static_cast<std::size_t>(which)];
  const std::size_t stride = stride_of(state, which);

  JointState out;
  out.dims = state.dims;
  out.amplitudes.resize(state.total_dim());
  for (std::size_t idx = 0; idx < state.total_dim(); ++idx) {
    const int g = digit_of(idx, stride, d);
    out.amplitudes[idx] =
        omega_pow(d, static_cast<long long>(g) * b) * state.amplitudes[idx];
  }
  return out;
}

namespace {

JointState fourier_on_kernel(const JointState& state, int which,
                             bool inverse) {
  require_subsystem(state, which);
  const int d = state.dims[static_cast<std::size_t>(which)];
  const std::size_t stride = stride_of(state, which);
  const std::size_t block = stride * static_cast<std::size_t>(d);
  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));

  std::vector<Complex> table(static_cast<std::size_t>(d));
  for (int t = 0; t < d; ++t) {
    const Complex w = omega_pow(d, t);
    table[static_cast<std::size_t>(t)] = inverse ? std::conj(w) : w;
  }

  JointState out;
  out.dims = state.dims;
  out.amplitudes.assign(state.total_dim(), Complex(0.0, 0.0));
  for (std::size_t base = 0; base < state.total_dim(); base += block) {
    for (std::size_t r = 0; r < stride; ++r) {
      for (int i = 0; i < d; ++i) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j < d; ++j) {
          const int t = static_cast<int>((static_cast<long long>(i) * j) % d);
          acc += table[static_cast<std::size_t>(t)] *
                 state.amplitudes[base + r + static_cast<std::size_t>(j) * stride];
        }
        out.amplitudes[base + r + static_cast<std::size_t>(i) * stride] =
            inv_sqrt_d * acc;
      }
    }
  }
  return out;
}

}  // namespace

JointState apply_f_on(const JointState& state, int which) {
  return fourier_on_kernel(state, which, false);
}

JointState apply_f_inverse_on(const JointState& state, int which) {
  return fourier_on_kernel(state, which, true);
}

JointMeasurementOutcome measure_subsystem(const JointState& state, int which,
                                          Basis basis, SplitMix64& rng) {
  require_subsystem(state, which);

  if (basis == Basis::fourier) {
    // Rotate the subsystem so the fourier label becomes the computational
    // one, measure there, and rotate the collapsed state back. This is an
    // exact projection onto the fourier state with the observed label.
    const JointState rotated = apply_f_inverse_on(state, which);
    JointMeasurementOutcome outcome =
        measure_subsystem(rotated, which, Basis::computational, rng);
    outcome.post_state = apply_f_on(outcome.post_state, which);
    return outcome;
  }

  const double total = state.norm_sq();
  if (std::abs(total - 1.0) > kMeasureNormTolerance) {
    throw std::runtime_error(
        "refusing to measure an unnormalized joint state (norm^2 = " +
        std::to_string(total) + ")");
  }

  const int d = state.dims[static_cast<std::size_t>(which)];
  const std::size_t stride = stride_of(state, which);

  std::vector<double> probabilities(static_cast<std::size_t>(d), 0.0);
  for (std::size_t idx = 0; idx < state.total_dim(); ++idx) {
    probabilities[static_cast<std::size_t>(digit_of(idx, stride, d))] +=
        std::norm(state.amplitudes[idx]);
  }

  const double u = rng.uniform01() * total;
  double cumulative = 0.0;
  int value = d - 1;
  for (int v = 0; v < d; ++v) {
    cumulative += probabilities[static_cast<std::size_t>(v)];
    if (u < cumulative) {
      value = v;
      break;
    }
  }
  while (value > 0 && probabilities[static_cast<std::size_t>(value)] <= 0.0) {
    --value;  // never land on a zero-probability label via rounding
  }

  const double p = probabilities[static_cast<std::size_t>(value)];
  const double scale = 1.0 / std::sqrt(p);

  JointMeasurementOutcome outcome;
  outcome.value = value;
  outcome.post_state.dims = state.dims;
  outcome.post_state.amplitudes.assign(state.total_dim(), Complex(0.0, 0.0));
  for (std::size_t idx = 0; idx < state.total_dim(); ++idx) {
    if (digit_of(idx, stride, d) == value) {
      outcome.post_state.amplitudes[idx] = scale * state.amplitudes[idx];
    }
  }
  return outcome;
}

}  // namespace quditwalk
