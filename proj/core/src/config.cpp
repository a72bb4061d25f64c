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

#include "quditwalk/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace quditwalk {

namespace {

using nlohmann::json;

void require_known_keys(const json& object, const std::set<std::string>& known,
                        const std::string& where) {
  for (const auto& item : object.items()) {
    if (!known.contains(item.key())) {
      throw ConfigError("unknown config key \"" + item.key() + "\" in " +
                        where);
    }
  }
}

}  // namespace

const char* to_string(AttackKind kind) {
  switch (kind) {
    case AttackKind::none:
      return "none";
    case AttackKind::intercept_resend:
      return "intercept_resend";
    case AttackKind::cnot_ancilla:
      return "cnot_ancilla";
  }
  return "none";
}

const char* to_string(BasisPolicy policy) {
  switch (policy) {
    case BasisPolicy::always_computational:
      return "always_computational";
    case BasisPolicy::always_fourier:
      return "always_fourier";
    case BasisPolicy::uniform_random:
      return "uniform_random";
  }
  return "uniform_random";
}

AttackKind attack_kind_from_string(const std::string& name) {
  if (name == "none") return AttackKind::none;
  if (name == "intercept_resend") return AttackKind::intercept_resend;
  if (name == "cnot_ancilla") return AttackKind::cnot_ancilla;
  throw ConfigError("unknown attack kind \"" + name + "\"");
}

BasisPolicy basis_policy_from_string(const std::string& name) {
  if (name == "always_computational") return BasisPolicy::always_computational;
  if (name == "always_fourier") return BasisPolicy::always_fourier;
  if (name == "uniform_random") return BasisPolicy::uniform_random;
  throw ConfigError("unknown basis policy \"" + name + "\"");
}

std::size_t joint_dimension(const ProtocolConfig& config) {
  std::size_t ancillas = 0;
  if (config.attack.kind == AttackKind::cnot_ancilla) {
    ancillas = config.attack.coalition.size();
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < ancillas + 1; ++i) {
    if (total > kJointDimensionCap / static_cast<std::size_t>(config.d)) {
      return kJointDimensionCap + 1;  // saturate; exact value no longer matters
    }
    total *= static_cast<std::size_t>(config.d);
  }
  return total;
}

void validate(const ProtocolConfig& config) {
  if (config.d < 2) {
    throw ConfigError("d must be at least 2");
  }
  if (config.n_players < 2) {
    throw ConfigError("players must be at least 2");
  }
  if (config.rounds == 0) {
    throw ConfigError("rounds must be positive");
  }
  if (!(config.check_fraction >= 0.0) || !(config.check_fraction <= 1.0)) {
    throw ConfigError("check_fraction must lie in [0, 1]");
  }
  if (!(config.detect_threshold >= 0.0) ||
      !(config.detect_threshold <= 1.0)) {
    throw ConfigError("detect_threshold must lie in [0, 1]");
  }
  if (config.controller != 0) {
    throw ConfigError("controller must be player 0");
  }
  if (config.threads < 1 || config.threads > 256) {
    throw ConfigError("threads must lie in [1, 256]");
  }

  const AttackDescriptor& attack = config.attack;
  switch (attack.kind) {
    case AttackKind::none:
      if (!attack.links.empty() || !attack.coalition.empty()) {
        throw ConfigError("attack \"none\" takes no links or coalition");
      }
      break;
    case AttackKind::intercept_resend:
      if (attack.links.empty()) {
        throw ConfigError("intercept_resend needs at least one link");
      }
      if (!attack.coalition.empty()) {
        throw ConfigError("intercept_resend takes no coalition");
      }
      break;
    case AttackKind::cnot_ancilla:
      if (attack.coalition.empty()) {
        throw ConfigError("cnot_ancilla needs at least one coalition member");
      }
      if (!attack.links.empty()) {
        throw ConfigError(
            "cnot_ancilla derives its links from the coalition; do not list "
            "links explicitly");
      }
      break;
  }

  // Surfaces range/duplicate problems at config time with ConfigError typing.
  try {
    make_interceptors(attack, config.n_players);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  if (joint_dimension(config) > kJointDimensionCap) {
    throw DimensionCapError(
        "joint state would exceed " + std::to_string(kJointDimensionCap) +
        " amplitudes; reduce d or the coalition size");
  }
}

ProtocolConfig config_from_json_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw ConfigError("config root must be a JSON object");
  }

  require_known_keys(root,
                     {"d", "players", "rounds", "seed", "check_fraction",
                      "detect_threshold", "controller", "threads", "attack"},
                     "config");

  ProtocolConfig config;
  try {
    config.d = root.value("d", config.d);
    config.n_players = root.value("players", config.n_players);
    config.rounds = root.value("rounds", config.rounds);
    config.seed = root.value("seed", config.seed);
    config.check_fraction = root.value("check_fraction", config.check_fraction);
    config.detect_threshold =
        root.value("detect_threshold", config.detect_threshold);
    config.controller = root.value("controller", config.controller);
    config.threads = root.value("threads", config.threads);

    if (root.contains("attack")) {
      const json& attack = root.at("attack");
      if (!attack.is_object()) {
        throw ConfigError("\"attack\" must be a JSON object");
      }
      require_known_keys(attack, {"kind", "links", "basis_policy", "coalition"},
                         "attack");
      config.attack.kind =
          attack_kind_from_string(attack.value("kind", "none"));
      config.attack.links =
          attack.value("links", std::vector<int>{});
      config.attack.basis_policy = basis_policy_from_string(
          attack.value("basis_policy", "uniform_random"));
      config.attack.coalition =
          attack.value("coalition", std::vector<int>{});
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field has the wrong type: ") +
                      e.what());
  }

  return config;
}

ProtocolConfig config_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file \"" + path + "\"");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return config_from_json_text(buffer.str());
}

std::string config_to_json_text(const ProtocolConfig& config) {
  json attack = {
      {"kind", to_string(config.attack.kind)},
      {"links", config.attack.links},
      {"basis_policy", to_string(config.attack.basis_policy)},
      {"coalition", config.attack.coalition},
  };
  json root = {
      {"d", config.d},
      {"players", config.n_players},
      {"rounds", config.rounds},
      {"seed", config.seed},
      {"check_fraction", config.check_fraction},
      {"detect_threshold", config.detect_threshold},
      {"controller", config.controller},
      {"attack", attack},
  };
  return root.dump(2);
}

}  // namespace quditwalk
