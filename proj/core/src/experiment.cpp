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

#include "quditwalk/experiment.hpp"

#include <algorithm>
#include <chrono>

#include "json.hpp"

namespace quditwalk {

namespace {

using nlohmann::json;

// Stream id for the public verification draw, distinct from every round id.
constexpr std::uint64_t kVerifyStream = 0x766572696679ull;

bool basis_was_wrong(const InterceptEvent& event, int link_row) {
  const Basis carried =
      (link_row % 2 == 0) ? Basis::computational : Basis::fourier;
  return event.basis != carried;
}

LinkAttackStats& stats_for_link(std::vector<LinkAttackStats>& per_link,
                                int link) {
  for (LinkAttackStats& stats : per_link) {
    if (stats.link == link) return stats;
  }
  per_link.push_back(LinkAttackStats{});
  per_link.back().link = link;
  return per_link.back();
}

}  // namespace

ExperimentReport summarize(const ProtocolConfig& config,
                           std::span<const RoundRecord> records,
                           double wall_time_ms) {
  ExperimentReport report;
  report.config = config;
  report.rounds = records.size();
  report.wall_time_ms = wall_time_ms;
  report.threads_used = config.threads;
  report.invalid_histogram.assign(static_cast<std::size_t>(config.d), 0);

  const bool attacked = config.attack.kind != AttackKind::none;

  std::vector<RoundRecord> valid_records;
  for (const RoundRecord& record : records) {
    const bool match =
        record.predicted.has_value() && *record.predicted == record.outcome;

    if (record.valid) {
      ++report.valid;
      valid_records.push_back(record);
      report.correlation.add(match);
      if (attacked) report.attack_mismatch.add(!match);
    } else {
      ++report.invalid;
      report.invalid_histogram[static_cast<std::size_t>(record.outcome)] += 1;
    }

    for (const InterceptEvent& event : record.attack.intercepts) {
      LinkAttackStats& stats = stats_for_link(report.per_link, event.link);
      ++stats.intercepts;
      const bool wrong = basis_was_wrong(
          event, record.link_rows[static_cast<std::size_t>(event.link)]);
      stats.wrong_basis.add(wrong);
      if (record.valid) {
        (wrong ? stats.mismatch_wrong_basis : stats.mismatch_right_basis)
            .add(!match);
      }
    }

    if (!record.attack.ancillas.empty()) {
      std::vector<std::pair<int, PlayerMove>> own_moves;
      own_moves.reserve(record.attack.ancillas.size());
      for (const AncillaRegister& reg : record.attack.ancillas) {
        own_moves.emplace_back(
            reg.owner, record.moves[static_cast<std::size_t>(reg.owner)]);
      }
      const CoalitionGuess guess = coalition_guess(
          record.attack.ancillas, record.announced_c, own_moves, config.d);

      for (const LinkGuess& lg : guess.links) {
        LinkAttackStats& stats = stats_for_link(report.per_link, lg.link);
        ++stats.taps;
        stats.fourier_usable.add(lg.usable);
        if (lg.usable) {
          stats.recovery.add(
              lg.position.has_value() &&
              *lg.position ==
                  record.link_positions[static_cast<std::size_t>(lg.link)]);
        }
        if (record.valid) {
          (lg.usable ? stats.mismatch_fourier : stats.mismatch_computational)
              .add(!match);
        }
      }
    }
  }

  if (report.rounds > 0) {
    report.efficiency = static_cast<double>(report.valid) /
                        static_cast<double>(report.rounds);
  }

  const std::uint64_t invalid_total = report.invalid;
  if (invalid_total >= 10 * static_cast<std::uint64_t>(config.d)) {
    report.invalid_uniformity = chi_square_uniformity(report.invalid_histogram);
  }

  if (!valid_records.empty()) {
    const std::vector<KeyString> keys =
        assemble_keys(valid_records, config.d);
    report.key_players = keys.size();
    report.key_length_sifted = keys.front().symbols.size();

    for (std::size_t p = 0; p < keys.front().symbols.size(); ++p) {
      long long sum = 0;
      for (const KeyString& key : keys) sum += key.symbols[p];
      if (mod_d(sum, config.d) != 0) ++report.zero_sum_violations;
    }

    SplitMix64 verify_rng = SplitMix64::substream(config.seed, kVerifyStream);
    const VerificationResult verification =
        verify_subsequence(keys, valid_records, config.check_fraction,
                           config.d, config.detect_threshold, verify_rng);
    report.verification_ran = true;
    report.positions_opened = verification.positions_opened;
    report.check_errors = verification.errors;
    report.check_error_rate = verification.error_rate;
    report.detected = verification.detected;
    report.key_length_after_check =
        verification.remaining_keys.front().symbols.size();
  }

  // Canonical output must not depend on which link happened to log first.
  std::sort(report.per_link.begin(), report.per_link.end(),
            [](const LinkAttackStats& x, const LinkAttackStats& y) {
              return x.link < y.link;
            });

  return report;
}

ExperimentReport run_experiment(const ProtocolConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<RoundRecord> records = run_rounds(config);
  const auto stop = std::chrono::steady_clock::now();
  const double wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return summarize(config, records, wall_ms);
}

namespace {

json rate_json(const RateStat& stat) {
  return json{{"count", stat.count}, {"n", stat.n}, {"rate", stat.rate()}};
}

json config_json(const ProtocolConfig& config) {
  return json{
      {"d", config.d},
      {"players", config.n_players},
      {"rounds", config.rounds},
      {"seed", config.seed},
      {"check_fraction", config.check_fraction},
      {"detect_threshold", config.detect_threshold},
      {"controller", config.controller},
      {"attack",
       {{"kind", to_string(config.attack.kind)},
        {"links", config.attack.links},
        {"basis_policy", to_string(config.attack.basis_policy)},
        {"coalition", config.attack.coalition}}},
  };
}

json canonical_json(const ExperimentReport& report) {
  json canonical;
  canonical["schema"] = "quditwalk-report-v1";
  canonical["seed"] = report.config.seed;
  canonical["config"] = config_json(report.config);

  json efficiency = {
      {"rounds", report.rounds},
      {"valid", report.valid},
      {"invalid", report.invalid},
      {"expected", 0.5},
  };
  if (report.efficiency.has_value()) {
    efficiency["rate"] = *report.efficiency;
    efficiency["three_sigma"] = 3.0 * binomial_sigma(0.5, report.rounds);
  } else {
    efficiency["rate"] = nullptr;
    efficiency["three_sigma"] = nullptr;
  }
  canonical["efficiency"] = efficiency;

  canonical["correlation"] = rate_json(report.correlation);

  json invalid_outcomes = {
      {"n", report.invalid},
      {"histogram", report.invalid_histogram},
  };
  if (report.invalid_uniformity.has_value()) {
    const ChiSquareResult& u = *report.invalid_uniformity;
    invalid_outcomes["uniformity"] = {
        {"statistic", u.statistic}, {"dof", u.dof},
        {"critical", u.critical},   {"significance", u.significance},
        {"samples", u.samples},     {"pass", u.pass},
    };
  } else {
    invalid_outcomes["uniformity"] = nullptr;
  }
  canonical["invalid_outcomes"] = invalid_outcomes;

  if (report.verification_ran) {
    canonical["verification"] = {
        {"opened", report.positions_opened},
        {"errors", report.check_errors},
        {"rate", report.check_error_rate},
        {"detected", report.detected},
        {"threshold", report.config.detect_threshold},
    };
    canonical["keys"] = {
        {"players", report.key_players},
        {"length_sifted", report.key_length_sifted},
        {"length_after_check", report.key_length_after_check},
        {"zero_sum_violations", report.zero_sum_violations},
    };
  } else {
    canonical["verification"] = nullptr;
    canonical["keys"] = nullptr;
  }

  if (report.config.attack.kind == AttackKind::none) {
    canonical["attack"] = nullptr;
  } else {
    json per_link = json::array();
    for (const LinkAttackStats& stats : report.per_link) {
      json entry = {{"link", stats.link}};
      if (report.config.attack.kind == AttackKind::intercept_resend) {
        entry["intercepts"] = stats.intercepts;
        entry["wrong_basis"] = rate_json(stats.wrong_basis);
        entry["mismatch_right_basis"] = rate_json(stats.mismatch_right_basis);
        entry["mismatch_wrong_basis"] = rate_json(stats.mismatch_wrong_basis);
      } else {
        entry["taps"] = stats.taps;
        entry["fourier_usable"] = rate_json(stats.fourier_usable);
        entry["recovery"] = rate_json(stats.recovery);
        entry["mismatch_computational"] =
            rate_json(stats.mismatch_computational);
        entry["mismatch_fourier"] = rate_json(stats.mismatch_fourier);
      }
      per_link.push_back(entry);
    }
    canonical["attack"] = {
        {"kind", to_string(report.config.attack.kind)},
        {"mismatch", rate_json(report.attack_mismatch)},
        {"per_link", per_link},
    };
  }

  return canonical;
}

}  // namespace

std::string report_canonical_text(const ExperimentReport& report) {
  return canonical_json(report).dump(2);
}

std::string report_to_json_text(const ExperimentReport& report) {
  json root;
  root["canonical"] = canonical_json(report);
  root["runtime"] = {
      {"wall_time_ms", report.wall_time_ms},
      {"threads", report.threads_used},
  };
  return root.dump(2);
}

void write_per_round_csv(std::ostream& out,
                         std::span<const RoundRecord> records) {
  out << "round_id,c_parity,valid,predicted,measured,match,attacked_link,"
         "attack_flags\n";
  for (const RoundRecord& record : records) {
    int parity = 0;
    for (int c : record.announced_c) parity ^= (c != 0 ? 1 : 0);

    unsigned flags = 0;
    std::optional<int> attacked_link;
    for (const InterceptEvent& event : record.attack.intercepts) {
      flags |= 1u;
      if (basis_was_wrong(
              event, record.link_rows[static_cast<std::size_t>(event.link)])) {
        flags |= 2u;
      }
      if (!attacked_link.has_value()) attacked_link = event.link;
    }
    for (const AncillaRegister& reg : record.attack.ancillas) {
      flags |= 4u;
      const int row = record.link_rows[static_cast<std::size_t>(reg.link)];
      if (row == 1 || row == 3) flags |= 8u;
      if (!attacked_link.has_value()) attacked_link = reg.link;
    }

    out << record.round_id << ',' << parity << ',' << (record.valid ? 1 : 0)
        << ',';
    if (record.predicted.has_value()) out << *record.predicted;
    out << ',' << record.outcome << ',';
    if (record.predicted.has_value()) {
      out << (*record.predicted == record.outcome ? 1 : 0);
    }
    out << ',';
    if (attacked_link.has_value()) out << *attacked_link;
    out << ',' << flags << '\n';
  }
}

}  // namespace quditwalk
