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

#include "quditwalk/adversary.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace quditwalk {

InterceptResult intercept_resend(const QuditState& carried, BasisPolicy policy,
                                 SplitMix64& rng) {
  Basis basis = Basis::computational;
  switch (policy) {
    case BasisPolicy::always_computational:
      basis = Basis::computational;
      break;
    case BasisPolicy::always_fourier:
      basis = Basis::fourier;
      break;
    case BasisPolicy::uniform_random:
      basis = (rng.uniform_below(2) == 0) ? Basis::computational
                                          : Basis::fourier;
      break;
  }

  InterceptResult result;
  result.basis = basis;
  if (basis == Basis::computational) {
    MeasurementOutcome outcome = measure_computational(carried, rng);
    result.observed = outcome.value;
    result.resent = std::move(outcome.post_state);
  } else {
    // Rotate into the fourier frame, measure, rotate back: the forwarded
    // state is exactly the fourier state with the observed label.
    MeasurementOutcome outcome =
        measure_computational(apply_f_inverse(carried), rng);
    result.observed = outcome.value;
    result.resent = apply_f(outcome.post_state);
  }
  return result;
}

AncillaRegister attach_cnot_ancilla(JointState& channel, int owner, int link) {
  if (channel.subsystem_count() < 1) {
    throw std::invalid_argument("channel holds no carried qudit");
  }
  const int d = channel.dims.back();
  // All ancillas live before the carried qudit, so earlier registers keep
  // their subsystem indices and the carried qudit stays last.
  const int position = channel.subsystem_count() - 1;
  channel = insert_subsystem(channel, position, plus_state(d));
  channel = apply_cnot_pair(channel, position, position + 1);

  AncillaRegister reg;
  reg.owner = owner;
  reg.link = link;
  reg.subsystem = position;
  return reg;
}

std::pair<JointState, AncillaRegister> attach_cnot_ancilla(
    const QuditState& carried) {
  JointState channel = to_joint(carried);
  AncillaRegister reg = attach_cnot_ancilla(channel, -1, -1);
  return {std::move(channel), reg};
}

std::vector<LinkInterceptor> make_interceptors(const AttackDescriptor& attack,
                                               int n_players) {
  if (n_players < 2) {
    throw std::invalid_argument("at least two players required");
  }
  const int n_links = n_players - 1;
  std::vector<LinkInterceptor> interceptors(
      static_cast<std::size_t>(n_links));

  auto require_unique = [](std::vector<int> values, const char* what) {
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
      throw std::invalid_argument(std::string("duplicate ") + what);
    }
  };

  switch (attack.kind) {
    case AttackKind::none:
      break;

    case AttackKind::intercept_resend: {
      require_unique(attack.links, "attack links");
      for (int link : attack.links) {
        if (link < 0 || link >= n_links) {
          throw std::invalid_argument("attack link " + std::to_string(link) +
                                      " out of range");
        }
        const BasisPolicy policy = attack.basis_policy;
        interceptors[static_cast<std::size_t>(link)] =
            [link, policy](JointState& channel, SplitMix64& rng,
                           RoundAttackLog& log) {
              if (channel.subsystem_count() != 1) {
                throw std::logic_error(
                    "intercept-resend expects a bare channel qudit");
              }
              QuditState carried{channel.amplitudes};
              InterceptResult r = intercept_resend(carried, policy, rng);
              channel.amplitudes = std::move(r.resent.amplitudes);
              log.intercepts.push_back({link, r.basis, r.observed});
            };
      }
      break;
    }

    case AttackKind::cnot_ancilla: {
      require_unique(attack.coalition, "coalition members");
      for (int member : attack.coalition) {
        if (member < 1 || member >= n_players) {
          throw std::invalid_argument(
              "coalition member " + std::to_string(member) +
              " has no preceding link to tap");
        }
        const int link = member - 1;
        interceptors[static_cast<std::size_t>(link)] =
            [member, link](JointState& channel, SplitMix64&,
                           RoundAttackLog& log) {
              log.ancillas.push_back(
                  attach_cnot_ancilla(channel, member, link));
            };
      }
      break;
    }
  }

  return interceptors;
}

CoalitionGuess coalition_guess(
    const std::vector<AncillaRegister>& ancillas,
    std::span<const int> announced_c,
    const std::vector<std::pair<int, PlayerMove>>& own_moves, int d) {
  // Row of the walker entering link i, from the public bits alone.
  std::vector<int> row_at_link(announced_c.size(), 0);
  int row = 0;
  for (std::size_t i = 0; i < announced_c.size(); ++i) {
    if (announced_c[i] != 0) row = (row + 1) % 4;
    row_at_link[i] = row;
  }

  CoalitionGuess guess;
  for (const AncillaRegister& reg : ancillas) {
    if (!reg.measured_value.has_value()) {
      throw std::invalid_argument("ancilla was never measured");
    }
    if (reg.link < 0 ||
        static_cast<std::size_t>(reg.link) >= row_at_link.size()) {
      throw std::invalid_argument("ancilla register names an unknown link");
    }

    LinkGuess lg;
    lg.link = reg.link;
    lg.ancilla_value = *reg.measured_value;
    const int link_row = row_at_link[static_cast<std::size_t>(reg.link)];
    lg.usable = (link_row == 1 || link_row == 3);

    if (lg.usable) {
      // A tapped fourier state with label q leaves the ancilla in the
      // fourier state labeled -q, so its readout v gives q = -v. Row 1
      // carries q = pos, row 3 carries q = -pos.
      const int q = mod_d(-static_cast<long long>(lg.ancilla_value), d);
      lg.position = (link_row == 1) ? q : mod_d(-static_cast<long long>(q), d);

      const auto it = std::find_if(
          own_moves.begin(), own_moves.end(),
          [&](const auto& entry) { return entry.first == reg.owner; });
      if (it == own_moves.end()) {
        throw std::invalid_argument(
            "coalition member " + std::to_string(reg.owner) +
            " did not supply their own move");
      }
      const LatticePoint entering{link_row, *lg.position};
      lg.position_after_owner = step(entering, it->second, /*d=*/d).pos;
    }

    guess.links.push_back(lg);
  }
  return guess;
}

}  // namespace quditwalk
