// Copyright 2026 The dpledger Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "dpledger/attack/linking.h"
#include "dpledger/bench/config.h"
#include "dpledger/bench/report.h"
#include "dpledger/bench/rounds.h"
#include "dpledger/ledger/snapshot.h"
#include "dpledger/status_macros.h"

namespace {

using dpledger::bench::BenchConfig;
using dpledger::bench::BenchHarness;
using dpledger::bench::Report;

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> epsilon;
  std::optional<double> rate;
  bool virtual_clock = false;
  bool wall_clock = false;
  std::string out = "out";
};

absl::StatusOr<BenchConfig> Resolve(const Options& o) {
  BenchConfig config;
  if (!o.config_path.empty()) {
    DPL_ASSIGN_OR_RETURN(config, dpledger::bench::LoadConfig(o.config_path));
  }
  if (o.seed) config.master_seed = *o.seed;
  if (o.epsilon) {
    config.epsilon = *o.epsilon;
    config.epsilon_sweep = {*o.epsilon};
  }
  if (o.rate) {
    config.rates = {*o.rate};
    config.query_rate = *o.rate;
  }
  if (o.virtual_clock) config.clock = dpledger::pipeline::ClockMode::kVirtual;
  if (o.wall_clock) config.clock = dpledger::pipeline::ClockMode::kWall;
  DPL_RETURN_IF_ERROR(config.Validate());
  return config;
}

absl::Status InitHarness(BenchHarness& harness, Report& report) {
  report.rounds.push_back(harness.RunInitRound(harness.config().rates.front()));
  if (report.rounds.back().committed == 0) {
    return absl::FailedPreconditionError("LedgerEmpty: nothing committed");
  }
  return absl::OkStatus();
}

absl::Status RunInit(const Options& o) {
  DPL_ASSIGN_OR_RETURN(BenchConfig config, Resolve(o));
  BenchHarness harness(config);
  Report report;
  DPL_RETURN_IF_ERROR(InitHarness(harness, report));
  const std::filesystem::path dir(o.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  DPL_RETURN_IF_ERROR(dpledger::ledger::WriteSnapshot(
      harness.network().peer(0).ledger().blocks(), dir / "ledger.snapshot"));
  DPL_RETURN_IF_ERROR(dpledger::bench::EmitReport(report, dir));
  std::cout << dpledger::bench::SummaryText(report);
  return absl::OkStatus();
}

absl::Status RunBench(const Options& o) {
  DPL_ASSIGN_OR_RETURN(BenchConfig config, Resolve(o));
  Report report;
  DPL_ASSIGN_OR_RETURN(report.rounds, dpledger::bench::RunRateBench(config));
  DPL_RETURN_IF_ERROR(dpledger::bench::EmitReport(report, o.out));
  std::cout << dpledger::bench::SummaryText(report);
  return absl::OkStatus();
}

absl::Status RunSweep(const Options& o) {
  DPL_ASSIGN_OR_RETURN(BenchConfig config, Resolve(o));
  BenchHarness harness(config);
  Report report;
  DPL_RETURN_IF_ERROR(InitHarness(harness, report));
  DPL_ASSIGN_OR_RETURN(report.sweep, harness.SweepEpsilon());
  DPL_RETURN_IF_ERROR(dpledger::bench::EmitReport(report, o.out));
  std::cout << dpledger::bench::SummaryText(report);
  return absl::OkStatus();
}

absl::Status AddAttack(BenchHarness& harness, Report& report) {
  for (auto scope : {dpledger::attack::QueryScope::kPerOwner,
                     dpledger::attack::QueryScope::kAllOwners}) {
    DPL_ASSIGN_OR_RETURN(auto rows, harness.AttackTable(scope));
    report.attack.insert(report.attack.end(), rows.begin(), rows.end());
  }
  DPL_ASSIGN_OR_RETURN(report.series, harness.Series());
  return absl::OkStatus();
}

absl::Status RunAttack(const Options& o) {
  DPL_ASSIGN_OR_RETURN(BenchConfig config, Resolve(o));
  BenchHarness harness(config);
  Report report;
  DPL_RETURN_IF_ERROR(InitHarness(harness, report));
  DPL_RETURN_IF_ERROR(AddAttack(harness, report));
  DPL_RETURN_IF_ERROR(dpledger::bench::EmitReport(report, o.out));
  std::cout << dpledger::bench::SummaryText(report);
  return absl::OkStatus();
}

absl::Status RunReport(const Options& o) {
  DPL_ASSIGN_OR_RETURN(BenchConfig config, Resolve(o));
  Report report;
  DPL_ASSIGN_OR_RETURN(report.rounds, dpledger::bench::RunRateBench(config));
  BenchHarness harness(config);
  Report scratch;
  DPL_RETURN_IF_ERROR(InitHarness(harness, scratch));
  DPL_ASSIGN_OR_RETURN(report.sweep, harness.SweepEpsilon());
  DPL_RETURN_IF_ERROR(AddAttack(harness, report));
  DPL_RETURN_IF_ERROR(dpledger::bench::EmitReport(report, o.out));
  std::cout << dpledger::bench::SummaryText(report);
  return absl::OkStatus();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private permissioned-ledger benchmark"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&opts](CLI::App* cmd) {
    cmd->add_option("--config", opts.config_path, "key = value config file");
    cmd->add_option("--seed", opts.seed, "master seed");
    cmd->add_option("--epsilon", opts.epsilon,
                    "privacy budget (replaces the sweep)");
    cmd->add_option("--rate", opts.rate, "send rate in tx/s (replaces rates)");
    auto* v = cmd->add_flag("--virtual-clock", opts.virtual_clock,
                            "simulated time (default)");
    auto* w = cmd->add_flag("--wall-clock", opts.wall_clock,
                            "pace events in real time");
    v->excludes(w);
    cmd->add_option("--out", opts.out, "output directory");
  };

  struct Command {
    const char* name;
    const char* help;
    absl::Status (*run)(const Options&);
  };
  const Command commands[] = {
      {"init", "build the network, run the write round, save the ledger",
       RunInit},
      {"bench", "write and query rounds at each send rate", RunBench},
      {"sweep", "query accuracy across the epsilon sweep", RunSweep},
      {"attack", "linking-attack success and privacy series", RunAttack},
      {"report", "everything above into one output directory", RunReport},
  };
  absl::Status status = absl::OkStatus();
  for (const Command& c : commands) {
    CLI::App* cmd = app.add_subcommand(c.name, c.help);
    add_common(cmd);
    cmd->callback([&status, &opts, run = c.run] { status = run(opts); });
  }

  CLI11_PARSE(app, argc, argv);
  if (!status.ok()) {
    std::cerr << "error: " << status.ToString() << "\n";
    return 1;
  }
  return 0;
}
