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

#ifndef DPLEDGER_BENCH_CONFIG_H_
#define DPLEDGER_BENCH_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dpledger/pipeline/network.h"

namespace dpledger::bench {

struct BenchConfig {
  // Workload.
  int workers = 5;
  int init_tx_total = 500;
  std::vector<double> rates{10, 20, 30, 40, 50};
  double query_round_duration_s = 15.0;
  std::vector<double> epsilon_sweep{0.5, 1.0, 1.5, 2.0, 2.5};
  double epsilon = 0.5;
  double sensitivity = 100.0;
  std::vector<std::string> customers{"Bob", "Claire", "David", "Ali", "Alice"};
  std::vector<std::string> colors{"red",   "blue", "green",  "black",
                                  "white", "pink", "rainbow"};
  std::vector<std::string> products{"sensor", "actuator", "controller",
                                    "valve", "motor"};
  std::int64_t quantity_min = 1;
  std::int64_t quantity_max = 100;
  std::uint64_t master_seed = 20220101;

  // Network. Costs are per transaction; they set where throughput saturates.
  int batch_size = 10;
  double batch_timeout_ms = 500.0;
  double write_endorse_ms = 22.0;
  double query_endorse_ms = 40.0;
  double order_ms = 1.0;
  double validate_ms = 1.0;
  double hop_ms = 0.0;
  pipeline::ClockMode clock = pipeline::ClockMode::kVirtual;
  bool noise = true;
  bool reuse_responses = false;

  // Sweep and attack evaluation.
  int repetitions = 10;
  double query_rate = 10.0;
  std::string target_owner = "Bob";
  double tolerance = 10.0;
  std::uint64_t attack_trials = 100'000;
  std::uint64_t series_repetitions = 100;
  std::uint64_t dp_trials = 1'000'000;
  int dp_bins = 50;

  absl::Status Validate() const;
  pipeline::NetworkConfig ToNetworkConfig() const;
};

// `key = value` lines; `#` starts a comment; list values are comma
// separated. Unknown keys are errors.
absl::StatusOr<BenchConfig> ParseConfig(std::string_view text,
                                        BenchConfig base = {});
absl::StatusOr<BenchConfig> LoadConfig(const std::filesystem::path& path);

}  // namespace dpledger::bench

#endif  // DPLEDGER_BENCH_CONFIG_H_
