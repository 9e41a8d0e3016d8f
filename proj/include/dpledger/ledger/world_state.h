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

#ifndef DPLEDGER_LEDGER_WORLD_STATE_H_
#define DPLEDGER_LEDGER_WORLD_STATE_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dpledger/ledger/codec.h"
#include "dpledger/types.h"

namespace dpledger::ledger {

// Run-configured validation rules for PurchaseRecord.
struct RecordRules {
  std::vector<std::string> customers{"Bob", "Claire", "David", "Ali", "Alice"};
  std::vector<std::string> colors{"red",   "blue", "green",  "black",
                                  "white", "pink", "rainbow"};
  std::int64_t min_quantity = 1;
  std::int64_t max_quantity = 100;
};

// Returns InvalidArgument ("InvalidRecord: ...") when the quantity is out of
// range, the owner or color is not configured, or the key is empty.
absl::Status ValidateRecord(const RecordRules& rules,
                            const PurchaseRecord& record);

// Key-value view of the ledger: record key -> (record, commit version).
// Mutated only through Put (tests, harness fixtures) and Apply (commit path).
class WorldState {
 public:
  struct Entry {
    PurchaseRecord record;
    std::uint64_t version = 0;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  // Validates and stores `record`, bumping the key's version.
  absl::StatusOr<std::string> Put(const RecordRules& rules,
                                  const PurchaseRecord& record);

  // Stores `record` at an explicit version. Caller has already validated.
  void Apply(const PurchaseRecord& record, std::uint64_t version);

  const PurchaseRecord* Find(std::string_view key) const;
  // 0 when the key has never been written.
  std::uint64_t Version(std::string_view key) const;

  // Sum of quantity over records owned by `owner`; kAllOwners matches every
  // record. Linear scan.
  std::int64_t SumQuantityByOwner(std::string_view owner) const;

  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, Entry, std::less<>>& entries() const {
    return entries_;
  }

  // Canonical bytes of every entry in key order.
  Bytes Serialize() const;

  friend bool operator==(const WorldState&, const WorldState&) = default;

 private:
  std::map<std::string, Entry, std::less<>> entries_;
};

}  // namespace dpledger::ledger

#endif  // DPLEDGER_LEDGER_WORLD_STATE_H_
