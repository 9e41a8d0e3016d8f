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

#ifndef DPLEDGER_TESTS_FIXTURES_H_
#define DPLEDGER_TESTS_FIXTURES_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dpledger/ledger/ledger.h"
#include "dpledger/types.h"

namespace dpledger::testing {

inline PurchaseRecord Rec(std::string key, std::string owner,
                          std::int64_t quantity, std::string color = "red",
                          std::string product = "widget") {
  return {std::move(key), std::move(product), std::move(owner), quantity,
          std::move(color)};
}

inline Transaction WriteTx(const PurchaseRecord& r, std::uint64_t version = 1) {
  Transaction tx;
  tx.tx_id = r.key;
  tx.type = TxType::kWrite;
  tx.payload = r;
  tx.client_id = "worker0";
  tx.write_set = {{r.key, version}};
  return tx;
}

inline Block ValidBlock(std::uint64_t number, const Digest& prev,
                        std::vector<Transaction> txs) {
  Block b = ledger::MakeBlock(number, prev, std::move(txs));
  b.validity.assign(b.txs.size(), true);
  return b;
}

// n records with uniformly drawn owners and quantities.
inline std::vector<PurchaseRecord> RandomRecords(std::size_t n,
                                                 std::uint64_t seed) {
  static const std::vector<std::string> kOwners{"Bob", "Claire", "David",
                                                "Ali", "Alice"};
  static const std::vector<std::string> kColors{
      "red", "blue", "green", "black", "white", "pink", "rainbow"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> owner(0, 4), color(0, 6), qty(1, 100);
  std::vector<PurchaseRecord> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(Rec("tx-" + std::to_string(i), kOwners[owner(rng)], qty(rng),
                      kColors[color(rng)]));
  }
  return out;
}

}  // namespace dpledger::testing

#endif  // DPLEDGER_TESTS_FIXTURES_H_
