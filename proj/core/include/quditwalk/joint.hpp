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

#ifndef QUDITWALK_JOINT_HPP_
#define QUDITWALK_JOINT_HPP_

#include <cstddef>
#include <vector>

#include "quditwalk/qudit.hpp"
#include "quditwalk/rng.hpp"

namespace quditwalk {

enum class Basis { computational, fourier };

// Joint amplitude vectors larger than this are refused outright; the engine
// targets exact desk-scale simulation, not large registers.
inline constexpr std::size_t kJointDimensionCap = 1000000;

// Pure state of several d-level subsystems. Amplitudes are row-major with
// subsystem 0 as the slowest-varying index, so appending a subsystem at the
// end never renumbers existing ones.
struct JointState {
  std::vector<int> dims;
  std::vector<Complex> amplitudes;

  int subsystem_count() const { return static_cast<int>(dims.size()); }
  std::size_t total_dim() const { return amplitudes.size(); }
  double norm_sq() const;
  bool is_normalized(double tol = 1e-9) const;
};

// Wraps a single qudit as a one-subsystem joint state.
JointState to_joint(const QuditState& state);

// Tensor product with the ancilla as subsystem 0 (slowest index) and the
// carried qudit as subsystem 1.
JointState embed_with_ancilla(const QuditState& ancilla,
                              const QuditState& carried);

// Tensor-inserts a fresh subsystem so it becomes index `position`; existing
// subsystems at or after that index shift up by one. Throws
// std::length_error if the result would exceed kJointDimensionCap.
JointState insert_subsystem(const JointState& state, int position,
                            const QuditState& inserted);

// Sum gate |i,j> -> |i, (i+j) mod d| on a two-subsystem state, subsystem 0
// as control.
JointState apply_cnot(const JointState& state);

// Same gate on arbitrary distinct subsystems of equal dimension.
JointState apply_cnot_pair(const JointState& state, int control, int target);

// Single-subsystem versions of the qudit operators, acting on `which` and
// leaving every other subsystem untouched.
JointState apply_x_pow_on(const JointState& state, int which, int a);
JointState apply_z_pow_on(const JointState& state, int which, int b);
JointState apply_f_on(const JointState& state, int which);
JointState apply_f_inverse_on(const JointState& state, int which);

struct JointMeasurementOutcome {
  int value = 0;
  JointState post_state;
};

// Born-rule measurement of one subsystem. A computational result v projects
// that subsystem onto |v>; a fourier result v projects onto the fourier
// state with label v (implemented by rotating the subsystem, measuring, and
// rotating back). The post state is renormalized and keeps all subsystems.
JointMeasurementOutcome measure_subsystem(const JointState& state, int which,
                                          Basis basis, SplitMix64& rng);

}  // namespace quditwalk

#endif  // QUDITWALK_JOINT_HPP_
