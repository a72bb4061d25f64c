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

#ifndef QUDITWALK_QUDIT_HPP_
#define QUDITWALK_QUDIT_HPP_

#include <complex>
#include <vector>

#include "quditwalk/rng.hpp"

namespace quditwalk {

using Complex = std::complex<double>;

// Measurements refuse to sample from a state whose squared norm has drifted
// further than this from 1; such drift means an upstream bug, not noise.
inline constexpr double kMeasureNormTolerance = 1e-6;

// x reduced into {0, ..., d-1} for any sign of x.
int mod_d(long long x, int d);

// omega^e with omega = exp(2*pi*i/d). The exponent is reduced mod d before
// any trigonometry, so products like j*k never feed large arguments to
// sin/cos and phases stay exact to ~1 ulp at every dimension.
Complex omega_pow(int d, long long exponent);

// Pure state of a single d-level system: d complex amplitudes indexed by the
// computational label.
struct QuditState {
  std::vector<Complex> amplitudes;

  int dim() const { return static_cast<int>(amplitudes.size()); }
  double norm_sq() const;
  bool is_normalized(double tol = 1e-9) const;
};

// |k>, the computational basis state.
QuditState basis_state(int d, int k);

// The conjugate (fourier) basis state with label k: amplitude at j is
// omega^{jk} / sqrt(d). Label 0 is the uniform superposition.
QuditState fourier_basis_state(int d, int k);

// fourier_basis_state(d, 0), the usual ancilla starting point.
QuditState plus_state(int d);

// Cyclic label shift: out[k] = in[(k - a) mod d]. Any integer a is accepted
// and reduced mod d.
QuditState apply_x_pow(const QuditState& state, int a);

// Label-dependent phase: out[k] = omega^{k*b} * in[k].
QuditState apply_z_pow(const QuditState& state, int b);

// Discrete Fourier rotation: out[i] = (1/sqrt d) sum_j omega^{i*j} in[j].
// Maps |k> to fourier_basis_state(k) and fourier label k to |-k mod d>;
// applying it four times is the identity.
QuditState apply_f(const QuditState& state);

// Inverse rotation (conjugated phases).
QuditState apply_f_inverse(const QuditState& state);

struct MeasurementOutcome {
  int value = 0;
  QuditState post_state;
};

// Samples a computational label with probability |amplitude|^2 and collapses
// the state to that label. Throws std::runtime_error if the state is not
// normalized to within kMeasureNormTolerance.
MeasurementOutcome measure_computational(const QuditState& state,
                                         SplitMix64& rng);

}  // namespace quditwalk

#endif  // QUDITWALK_QUDIT_HPP_
