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

#include <cstdio>
#include <fstream>

#include "doctest.h"

using namespace quditwalk;

TEST_SUITE_BEGIN("config");

TEST_CASE("an empty object parses to the defaults") {
  const ProtocolConfig config = config_from_json_text("{}");
  CHECK(config.d == 3);
  CHECK(config.n_players == 3);
  CHECK(config.rounds == 1000);
  CHECK(config.seed == 1);
  CHECK(config.check_fraction == doctest::Approx(0.2));
  CHECK(config.detect_threshold == 0.0);
  CHECK(config.controller == 0);
  CHECK(config.threads == 1);
  CHECK(config.attack.kind == AttackKind::none);
}

TEST_CASE("a full config round-trips through JSON") {
  ProtocolConfig config;
  config.d = 5;
  config.n_players = 6;
  config.rounds = 12345;
  config.seed = 99;
  config.check_fraction = 0.125;
  config.detect_threshold = 0.01;
  config.attack.kind = AttackKind::intercept_resend;
  config.attack.links = {0, 2};
  config.attack.basis_policy = BasisPolicy::always_fourier;

  const ProtocolConfig parsed = config_from_json_text(config_to_json_text(config));
  CHECK(parsed.d == config.d);
  CHECK(parsed.n_players == config.n_players);
  CHECK(parsed.rounds == config.rounds);
  CHECK(parsed.seed == config.seed);
  CHECK(parsed.check_fraction == doctest::Approx(config.check_fraction));
  CHECK(parsed.detect_threshold == doctest::Approx(config.detect_threshold));
  CHECK(parsed.attack.kind == config.attack.kind);
  CHECK(parsed.attack.links == config.attack.links);
  CHECK(parsed.attack.basis_policy == config.attack.basis_policy);
  CHECK(parsed.attack.coalition == config.attack.coalition);
  // The serialized form never mentions worker counts.
  CHECK(config_to_json_text(config).find("threads") == std::string::npos);
}

TEST_CASE("strict parsing rejects unknown keys and wrong types") {
  CHECK_THROWS_AS(config_from_json_text("{\"dd\": 3}"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text("{\"attack\": {\"kinds\": 1}}"),
                  ConfigError);
  CHECK_THROWS_AS(config_from_json_text("{\"d\": \"three\"}"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text("{\"attack\": 7}"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text("not json"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text("[1, 2]"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text("{\"attack\": {\"kind\": \"x\"}}"),
                  ConfigError);
  CHECK_THROWS_AS(
      config_from_json_text("{\"attack\": {\"basis_policy\": \"maybe\"}}"),
      ConfigError);
}

TEST_CASE("validation rejects out-of-range fields") {
  ProtocolConfig config;
  config.check_fraction = 0.0;

  auto expect_rejected = [](ProtocolConfig broken) {
    CHECK_THROWS_AS(validate(broken), ConfigError);
  };

  validate(config);  // the baseline is fine

  ProtocolConfig bad = config;
  bad.d = 1;
  expect_rejected(bad);
  bad = config;
  bad.n_players = 1;
  expect_rejected(bad);
  bad = config;
  bad.rounds = 0;
  expect_rejected(bad);
  bad = config;
  bad.check_fraction = 1.5;
  expect_rejected(bad);
  bad = config;
  bad.detect_threshold = -0.1;
  expect_rejected(bad);
  bad = config;
  bad.controller = 1;
  expect_rejected(bad);
  bad = config;
  bad.threads = 0;
  expect_rejected(bad);
}

TEST_CASE("validation rejects inconsistent attack descriptors") {
  ProtocolConfig config;
  config.n_players = 4;

  auto expect_rejected = [](ProtocolConfig broken) {
    CHECK_THROWS_AS(validate(broken), ConfigError);
  };

  ProtocolConfig bad = config;
  bad.attack.links = {0};  // links without an attack kind
  expect_rejected(bad);

  bad = config;
  bad.attack.kind = AttackKind::intercept_resend;
  expect_rejected(bad);  // no links
  bad.attack.links = {5};
  expect_rejected(bad);  // out of range
  bad.attack.links = {0};
  bad.attack.coalition = {1};
  expect_rejected(bad);  // stray coalition

  bad = config;
  bad.attack.kind = AttackKind::cnot_ancilla;
  expect_rejected(bad);  // no coalition
  bad.attack.coalition = {0};
  expect_rejected(bad);  // member 0 has no link before them
  bad.attack.coalition = {1};
  bad.attack.links = {0};
  expect_rejected(bad);  // redundant links

  bad = config;
  bad.attack.kind = AttackKind::cnot_ancilla;
  bad.attack.coalition = {1, 3};
  validate(bad);  // a two-member coalition is fine
}

TEST_CASE("the joint dimension cap maps to its own error type") {
  ProtocolConfig config;
  config.d = 101;
  config.n_players = 4;
  config.attack.kind = AttackKind::cnot_ancilla;
  config.attack.coalition = {1, 2};
  CHECK(joint_dimension(config) > kJointDimensionCap);
  CHECK_THROWS_AS(validate(config), DimensionCapError);

  // 100^3 sits exactly at the cap and is allowed.
  config.d = 100;
  CHECK(joint_dimension(config) == kJointDimensionCap);
  validate(config);
}

TEST_CASE("config files load and missing files are reported") {
  const char* path = "quditwalk_config_test.json";
  {
    std::ofstream out(path);
    out << "{\"d\": 4, \"players\": 5, \"attack\": {\"kind\": "
           "\"cnot_ancilla\", \"coalition\": [2]}}";
  }
  const ProtocolConfig config = config_from_json_file(path);
  CHECK(config.d == 4);
  CHECK(config.n_players == 5);
  CHECK(config.attack.kind == AttackKind::cnot_ancilla);
  CHECK(config.attack.coalition == std::vector<int>{2});
  std::remove(path);

  CHECK_THROWS_AS(config_from_json_file("does_not_exist.json"), ConfigError);
}

TEST_CASE("enum names round-trip") {
  for (AttackKind kind : {AttackKind::none, AttackKind::intercept_resend,
                          AttackKind::cnot_ancilla}) {
    CHECK(attack_kind_from_string(to_string(kind)) == kind);
  }
  for (BasisPolicy policy :
       {BasisPolicy::always_computational, BasisPolicy::always_fourier,
        BasisPolicy::uniform_random}) {
    CHECK(basis_policy_from_string(to_string(policy)) == policy);
  }
}

TEST_SUITE_END();
