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

#ifndef QUDITWALK_CONFIG_HPP_
#define QUDITWALK_CONFIG_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include "quditwalk/adversary.hpp"

namespace quditwalk {

// Rejected experiment setups: bad field values, malformed files, unknown keys.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The configured attack would push the round's joint state past
// kJointDimensionCap. Separate type so callers can map it to its own exit
// status.
class DimensionCapError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

struct ProtocolConfig {
  int d = 3;
  int n_players = 3;  // participants per round, including the controller
  std::uint64_t rounds = 1000;
  std::uint64_t seed = 1;
  double check_fraction = 0.2;
  // Verification trips when the opened-position error rate exceeds this.
  double detect_threshold = 0.0;
  int controller = 0;
  int threads = 1;  // execution detail; never part of canonical output
  AttackDescriptor attack;
};

// Amplitude count of the round's joint state: one carried qudit plus one
// ancilla per coalition member.
std::size_t joint_dimension(const ProtocolConfig& config);

// Throws ConfigError (or DimensionCapError) if the setup is unusable.
void validate(const ProtocolConfig& config);

// JSON round-trips. Parsing is strict: unknown keys are ConfigErrors, all
// fields are optional with the struct defaults above. The serialized form
// omits `threads` so reports stay byte-identical across worker counts.
ProtocolConfig config_from_json_text(const std::string& text);
ProtocolConfig config_from_json_file(const std::string& path);
std::string config_to_json_text(const ProtocolConfig& config);

const char* to_string(AttackKind kind);
const char* to_string(BasisPolicy policy);
AttackKind attack_kind_from_string(const std::string& name);
BasisPolicy basis_policy_from_string(const std::string& name);

}  // namespace quditwalk

#endif  // QUDITWALK_CONFIG_HPP_
