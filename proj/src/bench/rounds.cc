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

#include "dpledger/bench/rounds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "absl/strings/str_cat.h"
#include "dpledger/bench/workload.h"
#include "dpledger/dp/laplace.h"
#include "dpledger/status_macros.h"

namespace dpledger::bench {
namespace {

constexpr std::uint64_t kInitStream = 0x1417;
constexpr std::uint64_t kQueryStream = 0x5157;
constexpr std::uint64_t kAttackStream = 0xa77a;
constexpr std::uint64_t kSeriesStream = 0x5e71;

struct Collector {
  RoundMetrics* metrics;
  TimeNs first_submit = std::numeric_limits<TimeNs>::max();
  TimeNs last_commit = std::numeric_limits<TimeNs>::min();

  void Add(const pipeline::TxOutcome& o) {
    first_submit = std::min(first_submit, o.submit_time);
    if (o.committed) {
      ++metrics->committed;
      last_commit = std::max(last_commit, o.commit_time);
      metrics->latencies_ms.push_back(
          static_cast<double>(o.commit_time - o.submit_time) / 1e6);
    } else {
      ++metrics->failed;
    }
  }

  void Close() {
    metrics->in_flight =
        metrics->submitted - metrics->committed - metrics->failed;
    if (metrics->committed > 0 && last_commit > first_submit) {
      metrics->elapsed_s =
          static_cast<double>(last_commit - first_submit) / 1e9;
    }
    metrics->Finalize();
  }
};

}  // namespace

void RoundMetrics::Finalize() {
  if (elapsed_s > 0) throughput = static_cast<double>(committed) / elapsed_s;
  if (!latencies_ms.empty()) {
    auto [lo, hi] = std::minmax_element(latencies_ms.begin(),
                                        latencies_ms.end());
    latency_min_ms = *lo;
    latency_max_ms = *hi;
    latency_avg_ms =
        std::accumulate(latencies_ms.begin(), latencies_ms.end(), 0.0) /
        static_cast<double>(latencies_ms.size());
  }
  error_stats = attack::Summarize(relative_errors);
}

void RoundMetrics::Merge(const RoundMetrics& other) {
  submitted += other.submitted;
  committed += other.committed;
  failed += other.failed;
  in_flight += other.in_flight;
  elapsed_s += other.elapsed_s;
  latencies_ms.insert(latencies_ms.end(), other.latencies_ms.begin(),
                      other.latencies_ms.end());
  relative_errors.insert(relative_errors.end(), other.relative_errors.begin(),
                         other.relative_errors.end());
  throughput = 0.0;
  Finalize();
}

BenchHarness::BenchHarness(BenchConfig config)
    : config_(std::move(config)),
      network_(std::make_unique<pipeline::Network>(config_.ToNetworkConfig())) {
  truth_ = OwnerSums(config_, {});
}

RoundMetrics BenchHarness::RunInitRound(double rate) {
  RoundMetrics m;
  m.round = "init";
  m.rate = rate;
  Collector collector{&m};

  const TimeNs start = network_->sim().now();
  auto txs = GenerateWriteWorkload(
      config_, dp::MixSeed(config_.master_seed, kInitStream), rate);
  const auto targets = network_->peer_ids();
  for (Transaction& tx : txs) {
    const TimeNs at = start + tx.submit_time;
    PurchaseRecord record = std::get<PurchaseRecord>(tx.payload);
    ++m.submitted;
    network_->Submit(at, std::move(tx), targets,
                     [this, &collector, record = std::move(record)](
                         const pipeline::TxOutcome& o) {
                       collector.Add(o);
                       if (o.committed) committed_records_.push_back(record);
                     });
  }
  network_->Run();
  collector.Close();
  truth_ = OwnerSums(config_, committed_records_);
  return m;
}

absl::StatusOr<RoundMetrics> BenchHarness::RunQueryRound(
    double rate, double epsilon, std::uint64_t round_index) {
  if (committed_records_.empty()) {
    return absl::FailedPreconditionError(
        "LedgerEmpty: run the init round before querying");
  }
  if (!(epsilon > 0) || !(rate > 0)) {
    return absl::InvalidArgumentError(
        "InvalidParams: epsilon and rate must be positive");
  }
  RoundMetrics m;
  m.round = "query";
  m.rate = rate;
  m.epsilon = epsilon;
  Collector collector{&m};

  network_->SetEpsilon(epsilon);
  network_->ReseedPeers(
      dp::MixSeed(dp::MixSeed(config_.master_seed, kQueryStream), round_index));

  const TimeNs start = network_->sim().now();
  const TimeNs horizon =
      static_cast<TimeNs>(std::llround(config_.query_round_duration_s * 1e9));
  const std::vector<std::string> targets{network_->peer_ids().front()};
  for (std::uint64_t i = 0;; ++i) {
    const TimeNs offset = SubmissionTime(i, rate);
    if (offset >= horizon) break;
    const std::string& owner = config_.customers[i % config_.customers.size()];
    Transaction tx;
    tx.tx_id = absl::StrCat("q", round_index, "-", i);
    tx.type = TxType::kQuery;
    QueryLogEntry entry;
    entry.spec.queries.push_back({Aggregate::kSum, owner});
    tx.payload = std::move(entry);
    tx.client_id = WorkerName(i, config_.workers);
    ++m.submitted;
    network_->Submit(
        start + offset, std::move(tx), targets,
        [this, &collector, &m, owner](const pipeline::TxOutcome& o) {
          collector.Add(o);
          if (!o.committed || !o.response || o.response->values.empty()) {
            return;
          }
          auto err = attack::RelativeError(truth_.at(owner),
                                           o.response->values.front());
          if (err.ok()) m.relative_errors.push_back(*err);
        });
  }
  network_->Run();
  collector.Close();
  return m;
}

absl::StatusOr<std::vector<SweepRow>> BenchHarness::SweepEpsilon() {
  std::vector<SweepRow> rows;
  for (double eps : config_.epsilon_sweep) {
    RoundMetrics pooled;
    for (int rep = 0; rep < config_.repetitions; ++rep) {
      DPL_ASSIGN_OR_RETURN(
          RoundMetrics m,
          RunQueryRound(config_.query_rate, eps,
                        static_cast<std::uint64_t>(rep)));
      pooled.Merge(m);
    }
    SweepRow row;
    row.epsilon = eps;
    row.mean_relative_error = pooled.error_stats.mean;
    row.stddev_relative_error = pooled.error_stats.stddev;
    row.accuracy = 100.0 - pooled.error_stats.mean;
    row.samples = pooled.error_stats.count;
    rows.push_back(row);
  }
  return rows;
}

absl::StatusOr<attack::AttackSetup> BenchHarness::MakeAttackSetup(
    attack::QueryScope scope, bool perturb) const {
  if (committed_records_.empty()) {
    return absl::FailedPreconditionError(
        "LedgerEmpty: run the init round before attacking");
  }
  attack::AttackSetup setup;
  setup.state = network_->peer(0).ledger().state();
  setup.knowledge =
      attack::KnowledgeExcluding(committed_records_, config_.target_owner);
  setup.chaincode = network_->config().chaincode;
  setup.chaincode.perturb = perturb;
  setup.chaincode.reuse_responses = false;
  setup.scope = scope;
  setup.tolerance = config_.tolerance;
  auto it = truth_.find(config_.target_owner);
  if (it == truth_.end()) {
    return absl::InvalidArgumentError(
        absl::StrCat("InvalidRecord: unknown target owner ",
                     config_.target_owner));
  }
  setup.ground_truth = it->second;
  return setup;
}

absl::StatusOr<std::vector<AttackRow>> BenchHarness::AttackTable(
    attack::QueryScope scope) {
  const std::string scope_name =
      scope == attack::QueryScope::kPerOwner ? "per_owner" : "total";
  const std::uint64_t seed = dp::MixSeed(config_.master_seed, kAttackStream);
  std::vector<AttackRow> rows;

  DPL_ASSIGN_OR_RETURN(attack::AttackSetup plain,
                       MakeAttackSetup(scope, /*perturb=*/false));
  rows.push_back({scope_name, std::numeric_limits<double>::infinity(),
                  config_.tolerance,
                  attack::AttackSuccessRate(plain, config_.attack_trials, seed),
                  1.0, config_.attack_trials});

  DPL_ASSIGN_OR_RETURN(attack::AttackSetup noisy,
                       MakeAttackSetup(scope, /*perturb=*/true));
  for (double eps : config_.epsilon_sweep) {
    noisy.chaincode.privacy.epsilon = eps;
    DPL_ASSIGN_OR_RETURN(const double lambda,
                         dp::LaplaceScale(noisy.chaincode.privacy));
    rows.push_back(
        {scope_name, eps, config_.tolerance,
         attack::AttackSuccessRate(noisy, config_.attack_trials, seed),
         attack::AnalyticSuccessProbability(lambda, config_.tolerance),
         config_.attack_trials});
  }
  return rows;
}

absl::StatusOr<std::vector<attack::SeriesPoint>> BenchHarness::Series() {
  DPL_ASSIGN_OR_RETURN(
      attack::AttackSetup setup,
      MakeAttackSetup(attack::QueryScope::kPerOwner, /*perturb=*/true));
  const std::uint64_t seed = dp::MixSeed(config_.master_seed, kSeriesStream);
  std::vector<attack::SeriesPoint> out;
  for (double eps : config_.epsilon_sweep) {
    auto points = attack::PrivacySeries(
        setup.state, setup.chaincode, config_.target_owner, eps,
        config_.series_repetitions, seed, setup.ground_truth);
    out.insert(out.end(), points.begin(), points.end());
  }
  return out;
}

absl::StatusOr<std::vector<RoundMetrics>> RunRateBench(
    const BenchConfig& config) {
  DPL_RETURN_IF_ERROR(config.Validate());
  std::vector<RoundMetrics> rows;
  for (double rate : config.rates) {
    BenchHarness harness(config);
    rows.push_back(harness.RunInitRound(rate));
    DPL_ASSIGN_OR_RETURN(RoundMetrics q,
                         harness.RunQueryRound(rate, config.epsilon, 0));
    rows.push_back(std::move(q));
  }
  return rows;
}

}  // namespace dpledger::bench
