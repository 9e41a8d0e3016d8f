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

#ifndef DPLEDGER_BENCH_WORKLOAD_H_
#define DPLEDGER_BENCH_WORKLOAD_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dpledger/bench/config.h"
#include "dpledger/types.h"

namespace dpledger::bench {

// Offset of the i-th submission at an aggregate `rate` tx/s.
TimeNs SubmissionTime(std::uint64_t index, double rate);

// Worker `i % workers` submits the i-th transaction.
std::string WorkerName(std::uint64_t index, int workers);

// `init_tx_total` Write transactions with keys tx-0, tx-1, ... Owners,
// colors, products and quantities are drawn uniformly from the configured
// sets. submit_time holds the schedule offset at `rate`. Deterministic in
// (config, seed, rate).
std::vector<Transaction> GenerateWriteWorkload(const BenchConfig& config,
                                               std::uint64_t seed,
                                               double rate);

// Per-owner quantity sums, keyed by every configured customer.
std::map<std::string, double> OwnerSums(const BenchConfig& config,
                                        const std::vector<PurchaseRecord>& rs);

}  // namespace dpledger::bench

#endif  // DPLEDGER_BENCH_WORKLOAD_H_
