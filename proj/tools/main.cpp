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

// Command-line front end. Subcommands:
//   run       play an experiment and emit the JSON report
//   round     play a single round and print its trace
//   attack    like run but an attack is mandatory; without a pinned d it
//             sweeps a preset dimension list and emits a JSON array
//   selftest  operator-algebra and engine cross-check suites
// Exit codes: 0 success, 1 bad config or I/O, 2 selftest failure, 3 joint
// dimension cap exceeded.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "quditwalk/experiment.hpp"
#include "quditwalk/selftest.hpp"

namespace {

using namespace quditwalk;

struct CommonFlags {
  std::string config_path;
  int d = 0;
  int players = 0;
  std::uint64_t rounds = 0;
  std::uint64_t seed = 0;
  std::string attack_kind;
  double check_fraction = 0.0;
  std::string out_path;
  std::string csv_path;

  CLI::Option* config_opt = nullptr;
  CLI::Option* d_opt = nullptr;
  CLI::Option* players_opt = nullptr;
  CLI::Option* rounds_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* attack_opt = nullptr;
  CLI::Option* check_opt = nullptr;
};

void add_common_flags(CLI::App* cmd, CommonFlags* flags) {
  flags->config_opt =
      cmd->add_option("--config", flags->config_path, "JSON config file");
  flags->d_opt = cmd->add_option("--d", flags->d, "carrier dimension");
  flags->players_opt =
      cmd->add_option("--players", flags->players, "players per round");
  flags->rounds_opt =
      cmd->add_option("--rounds", flags->rounds, "rounds to play");
  flags->seed_opt = cmd->add_option("--seed", flags->seed, "experiment seed");
  flags->attack_opt =
      cmd->add_option("--attack", flags->attack_kind,
                      "attack kind: none, intercept_resend (link 0 unless the "
                      "config lists links), cnot_ancilla (coalition {1} "
                      "unless the config lists one)")
          ->check(CLI::IsMember(
              {"none", "intercept_resend", "cnot_ancilla"}));
  flags->check_opt = cmd->add_option("--check-fraction", flags->check_fraction,
                                     "fraction of key positions to open");
  cmd->add_option("--out", flags->out_path,
                  "write output here instead of stdout");
  cmd->add_option("--per-round-csv", flags->csv_path,
                  "also write one CSV line per round to this path");
}

// Config file first, then explicit flags on top.
ProtocolConfig resolve_config(const CommonFlags& flags) {
  ProtocolConfig config;
  if (flags.config_opt->count() > 0) {
    config = config_from_json_file(flags.config_path);
  }
  if (flags.d_opt->count() > 0) config.d = flags.d;
  if (flags.players_opt->count() > 0) config.n_players = flags.players;
  if (flags.rounds_opt->count() > 0) config.rounds = flags.rounds;
  if (flags.seed_opt->count() > 0) config.seed = flags.seed;
  if (flags.check_opt->count() > 0) config.check_fraction = flags.check_fraction;
  if (flags.attack_opt->count() > 0) {
    const AttackKind kind = attack_kind_from_string(flags.attack_kind);
    if (kind != config.attack.kind) {
      config.attack.kind = kind;
      if (kind != AttackKind::intercept_resend) config.attack.links.clear();
      if (kind != AttackKind::cnot_ancilla) config.attack.coalition.clear();
    }
    if (kind == AttackKind::intercept_resend && config.attack.links.empty()) {
      config.attack.links = {0};
    }
    if (kind == AttackKind::cnot_ancilla && config.attack.coalition.empty()) {
      config.attack.coalition = {1};
    }
  }
  validate(config);
  return config;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw ConfigError("cannot open output file \"" + out_path + "\"");
  }
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

std::string run_one(const ProtocolConfig& config, const std::string& csv_path) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<RoundRecord> records = run_rounds(config);
  const auto stop = std::chrono::steady_clock::now();
  const double wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();

  const ExperimentReport report = summarize(config, records, wall_ms);
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) {
      throw ConfigError("cannot open CSV file \"" + csv_path + "\"");
    }
    write_per_round_csv(csv, records);
  }
  return report_to_json_text(report);
}

int cmd_run(const CommonFlags& flags, bool require_attack) {
  ProtocolConfig config = resolve_config(flags);
  if (require_attack && config.attack.kind == AttackKind::none) {
    throw ConfigError(
        "the attack subcommand needs an attack; pass --attack or configure "
        "one in the config file");
  }

  // The attack subcommand sweeps a preset dimension list unless the caller
  // pins d by flag or config file; the output is then a JSON array.
  const bool sweep = require_attack && flags.d_opt->count() == 0 &&
                     flags.config_opt->count() == 0;
  if (!sweep) {
    emit(run_one(config, flags.csv_path), flags.out_path);
    return 0;
  }
  if (!flags.csv_path.empty()) {
    throw ConfigError("per-round CSV needs a single dimension; pass --d");
  }
  std::string text = "[";
  for (const int d : {2, 3, 4, 5, 8}) {
    config.d = d;
    validate(config);
    text += (d == 2 ? "\n" : ",\n") + run_one(config, "");
  }
  text += "\n]";
  emit(text, flags.out_path);
  return 0;
}

const char* basis_name(Basis basis) {
  return basis == Basis::computational ? "computational" : "fourier";
}

int cmd_round(const CommonFlags& flags) {
  ProtocolConfig config = resolve_config(flags);
  const std::vector<LinkInterceptor> interceptors =
      make_interceptors(config.attack, config.n_players);
  const RoundRecord record = run_round(config, 0, interceptors);

  std::ostringstream out;
  out << "round " << record.round_id << ": d=" << config.d
      << " players=" << config.n_players << " seed=" << config.seed << "\n";
  for (std::size_t i = 0; i < record.moves.size(); ++i) {
    const PlayerMove& move = record.moves[i];
    out << "  player " << i << ": a=" << move.a << " b=" << move.b
        << " c=" << move.c;
    if (i < record.link_rows.size()) {
      out << "   -> link " << i << " row=" << record.link_rows[i]
          << " pos=" << record.link_positions[i];
    }
    out << "\n";
  }
  out << "  announcement order:";
  for (int p : record.announcement_order) out << " " << p;
  out << "\n";
  for (const InterceptEvent& event : record.attack.intercepts) {
    out << "  intercept on link " << event.link << ": basis "
        << basis_name(event.basis) << ", observed " << event.observed << "\n";
  }
  for (const AncillaRegister& reg : record.attack.ancillas) {
    out << "  ancilla by player " << reg.owner << " on link " << reg.link
        << ": fourier readout " << *reg.measured_value << "\n";
  }
  out << "  valid: " << (record.valid ? "yes" : "no") << "\n";
  if (record.predicted.has_value()) {
    out << "  predicted: " << *record.predicted << "\n";
  }
  out << "  measured: " << record.outcome << "\n";
  if (record.predicted.has_value()) {
    out << "  match: " << (*record.predicted == record.outcome ? "yes" : "no")
        << "\n";
  }
  emit(out.str(), flags.out_path);
  return 0;
}

int cmd_selftest(const std::string& out_path) {
  const std::vector<int> dims = default_algebra_dims();
  std::vector<CheckResult> results = algebra_suite(dims);
  const std::vector<CheckResult> equivalence =
      engine_equivalence_suite(10000, 0xE9);
  results.insert(results.end(), equivalence.begin(), equivalence.end());

  std::ostringstream out;
  bool all_pass = true;
  for (const CheckResult& result : results) {
    all_pass = all_pass && result.pass;
    char line[160];
    std::snprintf(line, sizeof(line),
                  "[%s] %-32s worst %.3e  tol %.1e  cases %llu\n",
                  result.pass ? "PASS" : "FAIL", result.name.c_str(),
                  result.worst, result.tolerance,
                  static_cast<unsigned long long>(result.cases));
    out << line;
  }
  out << (all_pass ? "selftest: all checks passed\n"
                   : "selftest: FAILURES present\n");
  emit(out.str(), out_path);
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Sequential single-carrier key agreement: exact simulator and "
      "experiment harness"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  CLI::App* run_cmd = app.add_subcommand("run", "play a full experiment");
  add_common_flags(run_cmd, &run_flags);

  CommonFlags round_flags;
  CLI::App* round_cmd =
      app.add_subcommand("round", "play one round and print its trace");
  add_common_flags(round_cmd, &round_flags);

  CommonFlags attack_flags;
  CLI::App* attack_cmd = app.add_subcommand(
      "attack",
      "play experiments with an adversary present; sweeps d over "
      "{2,3,4,5,8} unless --d or --config pins one");
  add_common_flags(attack_cmd, &attack_flags);

  std::string selftest_out;
  CLI::App* selftest_cmd = app.add_subcommand(
      "selftest", "operator algebra and engine equivalence checks");
  selftest_cmd->add_option("--out", selftest_out,
                           "write output here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(run_flags, false);
    if (round_cmd->parsed()) return cmd_round(round_flags);
    if (attack_cmd->parsed()) return cmd_run(attack_flags, true);
    if (selftest_cmd->parsed()) return cmd_selftest(selftest_out);
  } catch (const DimensionCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
