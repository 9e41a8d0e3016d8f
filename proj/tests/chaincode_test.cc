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

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "dpledger/chaincode/chaincode.h"
#include "dpledger/dp/laplace.h"
#include "fixtures.h"
#include "gtest/gtest.h"

namespace dpledger::chaincode {
namespace {

using ::dpledger::testing::Rec;

QuerySpec Sum(std::vector<std::string> owners,
              std::optional<double> eps = std::nullopt) {
  QuerySpec spec;
  for (auto& o : owners) spec.queries.push_back({Aggregate::kSum, std::move(o)});
  spec.requested_epsilon = eps;
  return spec;
}

// Bob holds 100 records summing to 5050.
ledger::WorldState BobFixture() {
  ledger::WorldState s;
  for (int q = 1; q <= 100; ++q) {
    s.Apply(Rec("b" + std::to_string(q), "Bob", q), 1);
  }
  s.Apply(Rec("c1", "Claire", 7), 1);
  s.Apply(Rec("a1", "Ali", 40), 1);
  return s;
}

TEST(ClassifyTest, Paths) {
  Transaction w;
  w.type = TxType::kWrite;
  w.payload = Rec("a", "Bob", 1);
  EXPECT_EQ(*Classify(w), TxClass::kFinancial);
  w.type = TxType::kInit;
  EXPECT_EQ(*Classify(w), TxClass::kFinancial);

  Transaction q;
  q.type = TxType::kQuery;
  q.payload = QueryLogEntry{};
  EXPECT_EQ(*Classify(q), TxClass::kQuery);

  q.payload = Rec("a", "Bob", 1);
  auto bad = Classify(q);
  EXPECT_EQ(bad.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_NE(bad.status().message().find("UnknownType"), absl::string_view::npos);
  w.type = TxType::kWrite;
  w.payload = QueryLogEntry{};
  EXPECT_FALSE(Classify(w).ok());
}

TEST(ExecuteWriteTest, OneWriteNoReads) {
  Chaincode cc({}, 1);
  ledger::WorldState s;
  auto rw = cc.ExecuteWrite(s, Rec("k", "Bob", 50));
  ASSERT_TRUE(rw.ok());
  EXPECT_TRUE(rw->reads.empty());
  ASSERT_EQ(rw->writes.size(), 1u);
  EXPECT_EQ(rw->writes[0], (WriteEntry{"k", 1}));
  EXPECT_EQ(s.size(), 0u);

  s.Apply(Rec("k", "Bob", 50), 3);
  EXPECT_EQ(cc.ExecuteWrite(s, Rec("k", "Bob", 5))->writes[0].version, 4u);
}

TEST(ExecuteWriteTest, QuantityBound) {
  Chaincode cc({}, 1);
  auto rw = cc.ExecuteWrite({}, Rec("k", "Bob", 101));
  EXPECT_EQ(rw.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_NE(rw.status().message().find("InvalidRecord"),
            absl::string_view::npos);
}

TEST(ValidateSpecTest, Errors) {
  EXPECT_FALSE(ValidateQuerySpec({}).ok());
  EXPECT_FALSE(ValidateQuerySpec(Sum({""})).ok());
  QuerySpec odd = Sum({"Bob"});
  odd.queries[0].aggregate = static_cast<Aggregate>(7);
  auto s = ValidateQuerySpec(odd);
  EXPECT_EQ(s.code(), absl::StatusCode::kUnimplemented);
  EXPECT_NE(s.message().find("UnknownAggregate"), absl::string_view::npos);
}

TEST(ExecuteQueryTest, MonteCarloAroundTrueSum) {
  const auto state = BobFixture();
  ASSERT_EQ(state.SumQuantityByOwner("Bob"), 5050);
  Chaincode cc({}, 2024);
  const int runs = 10000;
  double sum = 0, abs_dev = 0;
  for (int i = 0; i < runs; ++i) {
    auto r = cc.ExecuteQuery(state, Sum({"Bob"}));
    ASSERT_TRUE(r.ok());
    ASSERT_EQ(r->values.size(), 1u);
    EXPECT_EQ(r->epsilon_used, 0.5);
    sum += r->values[0];
    abs_dev += std::abs(r->values[0] - 5050);
  }
  EXPECT_NEAR(sum / runs, 5050, 6);
  EXPECT_NEAR(abs_dev / runs, 200, 10);
}

TEST(ExecuteQueryTest, AbsentOwnerCenteredAtZero) {
  const auto state = BobFixture();
  Chaincode cc({}, 5);
  double sum = 0;
  const int runs = 20000;
  for (int i = 0; i < runs; ++i) {
    sum += cc.ExecuteQuery(state, Sum({"Nobody"}))->values[0];
  }
  // 5 standard errors of a Laplace(200) mean.
  EXPECT_LT(std::abs(sum / runs), 5 * 200 * std::sqrt(2.0 / runs));
}

TEST(ExecuteQueryTest, ThreeQueriesInOrder) {
  const auto state = BobFixture();
  ChaincodeConfig config;
  config.privacy.epsilon = 1e6;
  const std::vector<std::string> owners{"Bob", "Claire", "Ali"};
  const std::vector<double> truth{5050, 7, 40};
  std::vector<int> perm{0, 1, 2};
  do {
    Chaincode cc(config, 9);
    std::vector<std::string> spec_owners;
    for (int i : perm) spec_owners.push_back(owners[i]);
    auto r = cc.ExecuteQuery(state, Sum(spec_owners));
    ASSERT_TRUE(r.ok());
    ASSERT_EQ(r->values.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_NEAR(r->values[i], truth[perm[i]], 0.01);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(ExecuteQueryTest, NoiseDisabledReturnsTruth) {
  ChaincodeConfig config;
  config.perturb = false;
  Chaincode cc(config, 1);
  auto r = cc.ExecuteQuery(BobFixture(), Sum({"Bob", "Claire"}));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->values, (std::vector<double>{5050, 7}));
  EXPECT_EQ(r->epsilon_used, 0.0);
}

TEST(ExecuteQueryTest, RequestedEpsilonOnlyTightens) {
  Chaincode cc({}, 1);
  EXPECT_EQ(cc.EffectiveEpsilon(Sum({"Bob"}, 0.1)), 0.1);
  EXPECT_EQ(cc.EffectiveEpsilon(Sum({"Bob"}, 0.5)), 0.5);
  EXPECT_EQ(cc.EffectiveEpsilon(Sum({"Bob"}, 3.0)), 0.5);
  EXPECT_EQ(cc.EffectiveEpsilon(Sum({"Bob"}, -1.0)), 0.5);
  EXPECT_EQ(cc.EffectiveEpsilon(Sum({"Bob"})), 0.5);
  auto r = cc.ExecuteQuery(BobFixture(), Sum({"Bob"}, 0.25), "w");
  EXPECT_EQ(r->epsilon_used, 0.25);
  EXPECT_DOUBLE_EQ(cc.Spent("w"), 0.25);
}

TEST(ReuseTest, SecondAnswerEqualsFirstWithoutSpending) {
  ChaincodeConfig config;
  config.reuse_responses = true;
  Chaincode cc(config, 77);
  const auto state = BobFixture();
  const QuerySpec spec = Sum({"Bob"});
  auto first = cc.ExecuteQuery(state, spec, "w0");
  ASSERT_TRUE(first.ok());
  cc.RecordResponse(spec, *first, 10);
  const double spent = cc.Spent("w0");
  for (int i = 0; i < 5; ++i) {
    auto again = cc.ExecuteQuery(state, spec, "w0");
    EXPECT_EQ(*again, *first);
  }
  EXPECT_EQ(cc.Spent("w0"), spent);

  auto tighter = cc.ExecuteQuery(state, Sum({"Bob"}, 0.25), "w0");
  EXPECT_NE(tighter->values, first->values);
  EXPECT_GT(cc.Spent("w0"), spent);
}

TEST(ReuseTest, DisabledGivesFreshNoise) {
  Chaincode cc({}, 77);
  const auto state = BobFixture();
  const QuerySpec spec = Sum({"Bob"});
  auto first = cc.ExecuteQuery(state, spec, "w0");
  cc.RecordResponse(spec, *first, 10);
  auto second = cc.ExecuteQuery(state, spec, "w0");
  EXPECT_NE(first->values, second->values);
  EXPECT_DOUBLE_EQ(cc.Spent("w0"), 1.0);
}

TEST(SpecDigestTest, IncludesEpsilon) {
  const QuerySpec spec = Sum({"Bob"});
  EXPECT_EQ(SpecDigest(spec, 0.5), SpecDigest(spec, 0.5));
  EXPECT_NE(SpecDigest(spec, 0.5), SpecDigest(spec, 1.0));
  EXPECT_NE(SpecDigest(spec, 0.5), SpecDigest(Sum({"Ali"}), 0.5));
}

TEST(RecordResponseTest, LogHoldsOnlyPerturbedValues) {
  Chaincode cc({}, 3);
  const auto state = BobFixture();
  const QuerySpec spec = Sum({"Bob"});
  auto r = cc.ExecuteQuery(state, spec);
  const QueryLogEntry entry = cc.RecordResponse(spec, *r, 42);
  EXPECT_EQ(entry.spec, spec);
  EXPECT_EQ(entry.response, *r);
  EXPECT_EQ(entry.response_time, 42);
  EXPECT_EQ(entry.spec_digest, SpecDigest(spec, 0.5));
  EXPECT_NE(entry.response.values[0], 5050.0);
}

TEST(ConcurrencyTest, ParallelEndorsementsMatchSerialMultiset) {
  const auto state = BobFixture();
  constexpr int kThreads = 4, kPer = 500;
  Chaincode shared({}, 1234);
  std::vector<std::vector<double>> got(kThreads);
  std::vector<std::thread> threads;
  for (int t = 0; t < kThreads; ++t) {
    threads.emplace_back([&, t] {
      for (int i = 0; i < kPer; ++i) {
        got[t].push_back(shared.ExecuteQuery(state, Sum({"Bob"}))->values[0]);
      }
    });
  }
  for (auto& th : threads) th.join();
  std::vector<double> all;
  for (auto& g : got) all.insert(all.end(), g.begin(), g.end());

  Chaincode serial({}, 1234);
  std::vector<double> expected;
  for (int i = 0; i < kThreads * kPer; ++i) {
    expected.push_back(serial.ExecuteQuery(state, Sum({"Bob"}))->values[0]);
  }
  std::sort(all.begin(), all.end());
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(all, expected);
}

}  // namespace
}  // namespace dpledger::chaincode
