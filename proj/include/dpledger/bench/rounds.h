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

#ifndef DPLEDGER_BENCH_ROUNDS_H_
#define DPLEDGER_BENCH_ROUNDS_H_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "dpledger/attack/linking.h"
#include "dpledger/attack/metrics.h"
#include "dpledger/bench/config.h"
#include "dpledger/pipeline/network.h"

namespace dpledger::bench {

struct RoundMetrics {
  std::string round;  // "init" or "query"
  double rate = 0.0;
  double epsilon = 0.0;  // 0 for write rounds
  std::uint64_t submitted = 0;
  std::uint64_t committed = 0;
  std::uint64_t failed = 0;
  std::uint64_t in_flight = 0;
  double elapsed_s = 0.0;   // first submit to last commit
  double throughput = 0.0;  // committed / elapsed_s
  double latency_min_ms = 0.0;
  double latency_avg_ms = 0.0;
  double latency_max_ms = 0.0;
  std::vector<double> latencies_ms;
  // Query rounds: relative error of each committed answer, in percent.
  std::vector<double> relative_errors;
  attack::ErrorStats error_stats;

  // Pools the samples of `other` (counts add, statistics are recomputed).
  void Merge(const RoundMetrics& other);
  void Finalize();
};

struct SweepRow {
  double epsilon = 0.0;
  double mean_relative_error = 0.0;
  double stddev_relative_error = 0.0;
  double accuracy = 0.0;  // 100 - mean relative error
  std::uint64_t samples = 0;
};

struct AttackRow {
  std::string scope;  // "per_owner" or "total"
  double epsilon = 0.0;  // +inf when noise is disabled
  double tolerance = 0.0;
  double success_rate = 0.0;
  double analytic = 0.0;  // 1 when noise is disabled
  std::uint64_t trials = 0;
};

// Drives one channel through its rounds. Ground truth comes from the
// harness's own record of what it submitted and saw commit, never from
// anything the pipeline emits.
class BenchHarness {
 public:
  explicit BenchHarness(BenchConfig config);

  // 500 writes (by default) spread over the workers at `rate`, drained to
  // completion.
  RoundMetrics RunInitRound(double rate);

  // Per-owner sum queries for query_round_duration_s at `rate`, cycling
  // over customers, all at `epsilon`. Peers are reseeded from
  // (master_seed, round_index) so rounds with equal indices share noise.
  // FailedPrecondition ("LedgerEmpty") before any record has committed.
  absl::StatusOr<RoundMetrics> RunQueryRound(double rate, double epsilon,
                                             std::uint64_t round_index);

  // `repetitions` query rounds per epsilon at query_rate.
  absl::StatusOr<std::vector<SweepRow>> SweepEpsilon();

  // Monte-Carlo linking attack against the committed state, per epsilon in
  // the sweep plus the unperturbed chaincode.
  absl::StatusOr<std::vector<AttackRow>> AttackTable(attack::QueryScope scope);

  // Actual and noisy answers for the target owner at each sweep epsilon.
  absl::StatusOr<std::vector<attack::SeriesPoint>> Series();

  absl::StatusOr<attack::AttackSetup> MakeAttackSetup(
      attack::QueryScope scope, bool perturb) const;

  const std::map<std::string, double>& ground_truth() const {
    return truth_;
  }
  const std::vector<PurchaseRecord>& committed_records() const {
    return committed_records_;
  }
  pipeline::Network& network() { return *network_; }
  const BenchConfig& config() const { return config_; }

 private:
  BenchConfig config_;
  std::unique_ptr<pipeline::Network> network_;
  std::vector<PurchaseRecord> committed_records_;
  std::map<std::string, double> truth_;
};

// Fresh harness per rate: init round, then one query round at the same rate
// and config.epsilon.
absl::StatusOr<std::vector<RoundMetrics>> RunRateBench(
    const BenchConfig& config);

}  // namespace dpledger::bench

#endif  // DPLEDGER_BENCH_ROUNDS_H_
