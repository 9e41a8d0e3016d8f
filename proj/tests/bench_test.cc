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

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <unistd.h>

#include "dpledger/bench/config.h"
#include "dpledger/bench/report.h"
#include "dpledger/bench/rounds.h"
#include "dpledger/bench/workload.h"
#include "gtest/gtest.h"

namespace dpledger::bench {
namespace {

std::filesystem::path TempDir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() /
             ("dpledger_" + tag + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t Lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

BenchConfig Small() {
  BenchConfig c;
  c.init_tx_total = 100;
  c.query_round_duration_s = 3;
  c.repetitions = 2;
  c.attack_trials = 2000;
  c.series_repetitions = 20;
  return c;
}

TEST(ConfigTest, DefaultsAreValid) {
  const BenchConfig c;
  EXPECT_TRUE(c.Validate().ok());
  EXPECT_EQ(c.workers, 5);
  EXPECT_EQ(c.init_tx_total, 500);
  EXPECT_EQ(c.rates, (std::vector<double>{10, 20, 30, 40, 50}));
  EXPECT_EQ(c.epsilon_sweep, (std::vector<double>{0.5, 1, 1.5, 2, 2.5}));
  EXPECT_EQ(c.sensitivity, 100);
  EXPECT_EQ(c.customers.size(), 5u);
  EXPECT_EQ(c.colors.size(), 7u);
}

TEST(ConfigTest, ParsesKeyValueText) {
  auto c = ParseConfig(R"(
    # comment
    workers = 3
    rates = 5, 15 ,25
    epsilon_sweep = 1.0
    customers = Bob, Ali
    clock = wall
    noise = off
    master_seed = 18446744073709551615
  )");
  ASSERT_TRUE(c.ok()) << c.status();
  EXPECT_EQ(c->workers, 3);
  EXPECT_EQ(c->rates, (std::vector<double>{5, 15, 25}));
  EXPECT_EQ(c->epsilon_sweep, (std::vector<double>{1.0}));
  EXPECT_EQ(c->customers, (std::vector<std::string>{"Bob", "Ali"}));
  EXPECT_EQ(c->clock, pipeline::ClockMode::kWall);
  EXPECT_FALSE(c->noise);
  EXPECT_EQ(c->master_seed, 18446744073709551615ull);
}

TEST(ConfigTest, RejectsBadInput) {
  EXPECT_FALSE(ParseConfig("bogus = 1").ok());
  EXPECT_FALSE(ParseConfig("workers").ok());
  EXPECT_FALSE(ParseConfig("workers = many").ok());
  EXPECT_FALSE(ParseConfig("rates = 30, 10").ok());
  EXPECT_FALSE(ParseConfig("quantity_max = 101").ok());
  EXPECT_FALSE(ParseConfig("quantity_min = 0").ok());
  EXPECT_FALSE(ParseConfig("workers = 0").ok());
  EXPECT_FALSE(ParseConfig("epsilon_sweep = 0.5, -1").ok());
  EXPECT_FALSE(ParseConfig("clock = sundial").ok());
  EXPECT_EQ(LoadConfig("/nonexistent/cfg").status().code(),
            absl::StatusCode::kUnavailable);
}

TEST(WorkloadTest, DeterministicUnderSeed) {
  const BenchConfig c;
  EXPECT_EQ(GenerateWriteWorkload(c, 5, 10), GenerateWriteWorkload(c, 5, 10));
  EXPECT_NE(GenerateWriteWorkload(c, 5, 10), GenerateWriteWorkload(c, 6, 10));
}

TEST(WorkloadTest, ShapeAndInterleaving) {
  const BenchConfig c;
  const auto txs = GenerateWriteWorkload(c, 1, 25);
  ASSERT_EQ(txs.size(), 500u);
  for (std::size_t i = 0; i < txs.size(); ++i) {
    EXPECT_EQ(txs[i].type, TxType::kWrite);
    EXPECT_EQ(txs[i].tx_id, "tx-" + std::to_string(i));
    EXPECT_EQ(txs[i].client_id, "worker" + std::to_string(i % 5));
    const auto& r = std::get<PurchaseRecord>(txs[i].payload);
    EXPECT_EQ(r.key, txs[i].tx_id);
    EXPECT_GE(r.quantity, 1);
    EXPECT_LE(r.quantity, 100);
  }
}

// Owner counts are Binomial(500, 1/5). One owner's total has standard
// deviation sqrt(100 * 833.25 + 80 * 50.5^2) ~= 536, so single totals are
// checked at 4 sigma (150 draws) and the 4300..5800 band is applied to the
// per-owner mean over the seeds.
TEST(WorkloadTest, OwnerCountsAndSums) {
  const BenchConfig c;
  constexpr int kSeeds = 30;
  std::map<std::string, double> mean_sum;
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const auto txs = GenerateWriteWorkload(c, seed, 10);
    std::map<std::string, int> counts;
    std::vector<PurchaseRecord> records;
    for (const auto& tx : txs) {
      records.push_back(std::get<PurchaseRecord>(tx.payload));
      ++counts[records.back().owner];
    }
    for (const auto& owner : c.customers) {
      EXPECT_GE(counts[owner], 60) << seed;
      EXPECT_LE(counts[owner], 140) << seed;
    }
    for (const auto& [owner, sum] : OwnerSums(c, records)) {
      EXPECT_GE(sum, 5050 - 4 * 536) << owner;
      EXPECT_LE(sum, 5050 + 4 * 536) << owner;
      mean_sum[owner] += sum / kSeeds;
    }
  }
  for (const auto& [owner, mean] : mean_sum) {
    EXPECT_GE(mean, 4300) << owner;
    EXPECT_LE(mean, 5800) << owner;
  }
}

TEST(WorkloadTest, RateFidelityVirtualClock) {
  const BenchConfig c;
  for (double rate : {10.0, 30.0, 50.0}) {
    const auto txs = GenerateWriteWorkload(c, 1, rate);
    for (std::size_t i = 1; i < txs.size(); ++i) {
      const double gap = static_cast<double>(txs[i].submit_time -
                                             txs[i - 1].submit_time);
      EXPECT_NEAR(gap, 1e9 / rate, 1.0);
    }
    EXPECT_EQ(txs.back().submit_time, SubmissionTime(499, rate));
  }
}

TEST(InitRoundTest, LowRateCommitsEverything) {
  BenchHarness h(BenchConfig{});
  const RoundMetrics m = h.RunInitRound(10);
  EXPECT_EQ(m.submitted, 500u);
  EXPECT_EQ(m.committed, 500u);
  EXPECT_EQ(m.failed, 0u);
  EXPECT_EQ(m.in_flight, 0u);
  EXPECT_NEAR(m.throughput, 10, 2);
  EXPECT_LE(m.latency_min_ms, m.latency_avg_ms);
  EXPECT_LE(m.latency_avg_ms, m.latency_max_ms);
  EXPECT_TRUE(h.network().Converged());

  double total = 0;
  for (const auto& [owner, sum] : h.ground_truth()) {
    EXPECT_EQ(sum, h.network().peer(1).ledger().state().SumQuantityByOwner(owner));
    total += sum;
  }
  EXPECT_EQ(total, h.network().peer(0).ledger().state().SumQuantityByOwner("*"));
}

TEST(InitRoundTest, ZeroLengthWorkload) {
  BenchConfig c;
  c.init_tx_total = 0;
  BenchHarness h(c);
  const RoundMetrics m = h.RunInitRound(10);
  EXPECT_EQ(m.submitted, 0u);
  EXPECT_EQ(m.committed, 0u);
  EXPECT_EQ(m.throughput, 0.0);
  EXPECT_TRUE(m.latencies_ms.empty());
  auto q = h.RunQueryRound(10, 0.5, 0);
  EXPECT_EQ(q.status().code(), absl::StatusCode::kFailedPrecondition);
  EXPECT_NE(q.status().message().find("LedgerEmpty"), absl::string_view::npos);
}

TEST(InitRoundTest, ThroughputMonotoneBelowCapacity) {
  double last = 0;
  for (double rate : {10.0, 20.0, 30.0, 40.0}) {
    BenchHarness h(BenchConfig{});
    const RoundMetrics m = h.RunInitRound(rate);
    EXPECT_EQ(m.committed, 500u);
    EXPECT_GE(m.throughput, last) << rate;
    EXPECT_LE(m.throughput, rate * 1.01);
    last = m.throughput;
  }
}

TEST(QueryRoundTest, ConservationAndErrorSamples) {
  BenchHarness h(Small());
  h.RunInitRound(10);
  for (double rate : {10.0, 50.0}) {
    auto m = h.RunQueryRound(rate, 0.5, 0);
    ASSERT_TRUE(m.ok());
    EXPECT_EQ(m->submitted, static_cast<std::uint64_t>(3 * rate));
    EXPECT_EQ(m->submitted, m->committed + m->failed + m->in_flight);
    EXPECT_EQ(m->relative_errors.size(), m->committed);
    EXPECT_GT(m->error_stats.mean, 0);
  }
}

TEST(QueryRoundTest, NoiseDisabledHasZeroError) {
  BenchConfig c = Small();
  c.noise = false;
  BenchHarness h(c);
  h.RunInitRound(10);
  auto m = h.RunQueryRound(10, 0.5, 0);
  ASSERT_TRUE(m.ok());
  EXPECT_GT(m->relative_errors.size(), 0u);
  EXPECT_EQ(m->error_stats.mean, 0.0);
}

TEST(QueryRoundTest, SameRoundIndexSameNoise) {
  BenchHarness a(Small()), b(Small());
  a.RunInitRound(10);
  b.RunInitRound(10);
  EXPECT_EQ(a.RunQueryRound(10, 1, 3)->relative_errors,
            b.RunQueryRound(10, 1, 3)->relative_errors);
}

TEST(SweepTest, RowsAndTrend) {
  BenchHarness h(Small());
  h.RunInitRound(10);
  auto rows = h.SweepEpsilon();
  ASSERT_TRUE(rows.ok());
  ASSERT_EQ(rows->size(), 5u);
  for (std::size_t i = 1; i < rows->size(); ++i) {
    EXPECT_LT((*rows)[i].mean_relative_error, (*rows)[i - 1].mean_relative_error);
    EXPECT_GT((*rows)[i].accuracy, (*rows)[i - 1].accuracy);
  }
  for (const auto& r : *rows) {
    EXPECT_DOUBLE_EQ(r.accuracy, 100 - r.mean_relative_error);
    EXPECT_EQ(r.samples, 2u * 30u);
  }
}

TEST(SweepTest, SingleEpsilonIsOneQueryRound) {
  BenchConfig c = Small();
  c.epsilon_sweep = {0.5};
  c.repetitions = 1;
  BenchHarness a(c), b(c);
  a.RunInitRound(10);
  b.RunInitRound(10);
  auto rows = a.SweepEpsilon();
  auto round = b.RunQueryRound(c.query_rate, 0.5, 0);
  ASSERT_EQ(rows->size(), 1u);
  EXPECT_DOUBLE_EQ(rows->front().mean_relative_error, round->error_stats.mean);
}

TEST(ReportTest, EmptyMetricsGiveHeaders) {
  EXPECT_EQ(Lines(BenchCsv({})), 1u);
  EXPECT_EQ(Lines(SweepCsv({})), 1u);
  EXPECT_EQ(Lines(AttackCsv({})), 1u);
  EXPECT_EQ(Lines(SeriesCsv({})), 1u);
  EXPECT_EQ(SweepCsv({}), "epsilon,mean_rel_err_pct,accuracy_pct,trials,"
                          "std_rel_err_pct\n");
  EXPECT_EQ(SeriesCsv({}), "epsilon,trial,actual,noisy,relative_error\n");
}

TEST(ReportTest, FixedSixDecimals) {
  SweepRow row;
  row.epsilon = 0.5;
  row.mean_relative_error = 1.0 / 3;
  row.accuracy = 100 - 1.0 / 3;
  row.samples = 7;
  EXPECT_EQ(SweepCsv({row}).substr(SweepCsv({}).size()),
            "0.500000,0.333333,99.666667,7,0.000000\n");
}

Report FullReport(const BenchConfig& c) {
  Report report;
  report.rounds = *RunRateBench(c);
  BenchHarness h(c);
  h.RunInitRound(c.rates.front());
  report.sweep = *h.SweepEpsilon();
  report.attack = *h.AttackTable(attack::QueryScope::kPerOwner);
  report.series = *h.Series();
  return report;
}

TEST(ReportTest, ByteIdenticalAcrossRuns) {
  BenchConfig c = Small();
  c.rates = {10, 30};
  const auto d1 = TempDir("r1"), d2 = TempDir("r2");
  ASSERT_TRUE(EmitReport(FullReport(c), d1).ok());
  ASSERT_TRUE(EmitReport(FullReport(c), d2).ok());
  for (const char* f :
       {"bench.csv", "sweep.csv", "attack.csv", "series.csv", "summary.txt"}) {
    const std::string a = Slurp(d1 / f);
    EXPECT_FALSE(a.empty()) << f;
    EXPECT_EQ(a, Slurp(d2 / f)) << f;
  }
  EXPECT_EQ(Lines(Slurp(d1 / "sweep.csv")), 6u);
  EXPECT_EQ(Lines(Slurp(d1 / "bench.csv")), 5u);
  EXPECT_EQ(Lines(Slurp(d1 / "series.csv")), 1u + 5 * 20);
  std::filesystem::remove_all(d1);
  std::filesystem::remove_all(d2);
}

TEST(ReportTest, IoFailure) {
  auto s = EmitReport({}, "/proc/dpledger_cannot_write_here");
  EXPECT_EQ(s.code(), absl::StatusCode::kUnavailable);
  EXPECT_NE(s.message().find("IoFailure"), absl::string_view::npos);
}

TEST(WallClockTest, MeanRateWithinTenPercent) {
  BenchConfig c;
  c.init_tx_total = 21;
  c.clock = pipeline::ClockMode::kWall;
  c.write_endorse_ms = c.order_ms = c.validate_ms = 0;
  BenchHarness h(c);
  std::vector<std::chrono::steady_clock::time_point> arrivals;
  h.network().AddOrdererTap([&](const Transaction&) {
    arrivals.push_back(std::chrono::steady_clock::now());
  });
  const double rate = 50;
  const RoundMetrics m = h.RunInitRound(rate);
  EXPECT_EQ(m.committed, 21u);
  ASSERT_EQ(arrivals.size(), 21u);
  const double span =
      std::chrono::duration<double>(arrivals.back() - arrivals.front()).count();
  EXPECT_NEAR(20 / span, rate, rate * 0.1);
}

}  // namespace
}  // namespace dpledger::bench
