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

#include "dpledger/bench/workload.h"

#include <cmath>
#include <random>

#include "absl/strings/str_cat.h"

namespace dpledger::bench {

TimeNs SubmissionTime(std::uint64_t index, double rate) {
  return static_cast<TimeNs>(
      std::llround(static_cast<double>(index) * 1e9 / rate));
}

std::string WorkerName(std::uint64_t index, int workers) {
  return absl::StrCat("worker", index % static_cast<std::uint64_t>(workers));
}

std::vector<Transaction> GenerateWriteWorkload(const BenchConfig& config,
                                               std::uint64_t seed,
                                               double rate) {
  std::mt19937_64 rng(seed);
  auto pick = [&rng](const std::vector<std::string>& from) {
    std::uniform_int_distribution<std::size_t> d(0, from.size() - 1);
    return from[d(rng)];
  };
  std::uniform_int_distribution<std::int64_t> quantity(config.quantity_min,
                                                       config.quantity_max);
  std::vector<Transaction> out;
  out.reserve(static_cast<std::size_t>(config.init_tx_total));
  for (int i = 0; i < config.init_tx_total; ++i) {
    PurchaseRecord r;
    r.key = absl::StrCat("tx-", i);
    r.owner = pick(config.customers);
    r.product = pick(config.products);
    r.color = pick(config.colors);
    r.quantity = quantity(rng);

    Transaction tx;
    tx.tx_id = r.key;
    tx.type = TxType::kWrite;
    tx.payload = std::move(r);
    tx.client_id = WorkerName(i, config.workers);
    tx.submit_time = SubmissionTime(i, rate);
    out.push_back(std::move(tx));
  }
  return out;
}

std::map<std::string, double> OwnerSums(const BenchConfig& config,
                                        const std::vector<PurchaseRecord>& rs) {
  std::map<std::string, double> sums;
  for (const auto& c : config.customers) sums[c] = 0.0;
  for (const auto& r : rs) sums[r.owner] += static_cast<double>(r.quantity);
  return sums;
}

}  // namespace dpledger::bench
