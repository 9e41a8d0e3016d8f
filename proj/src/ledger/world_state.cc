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

#include "dpledger/ledger/world_state.h"

#include <algorithm>

#include "absl/strings/str_cat.h"

namespace dpledger::ledger {
namespace {

bool Contains(const std::vector<std::string>& set, std::string_view value) {
  return std::find(set.begin(), set.end(), value) != set.end();
}

}  // namespace

absl::Status ValidateRecord(const RecordRules& rules,
                            const PurchaseRecord& record) {
  if (record.key.empty()) {
    return absl::InvalidArgumentError("InvalidRecord: empty key");
  }
  if (record.quantity < rules.min_quantity ||
      record.quantity > rules.max_quantity) {
    return absl::InvalidArgumentError(absl::StrCat(
        "InvalidRecord: quantity ", record.quantity, " outside [",
        rules.min_quantity, ", ", rules.max_quantity, "]"));
  }
  if (!Contains(rules.customers, record.owner)) {
    return absl::InvalidArgumentError(
        absl::StrCat("InvalidRecord: unknown owner '", record.owner, "'"));
  }
  if (!Contains(rules.colors, record.color)) {
    return absl::InvalidArgumentError(
        absl::StrCat("InvalidRecord: unknown color '", record.color, "'"));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::string> WorldState::Put(const RecordRules& rules,
                                            const PurchaseRecord& record) {
  if (auto status = ValidateRecord(rules, record); !status.ok()) {
    return status;
  }
  Apply(record, Version(record.key) + 1);
  return record.key;
}

void WorldState::Apply(const PurchaseRecord& record, std::uint64_t version) {
  auto& entry = entries_[record.key];
  entry.record = record;
  entry.version = version;
}

const PurchaseRecord* WorldState::Find(std::string_view key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second.record;
}

std::uint64_t WorldState::Version(std::string_view key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? 0 : it->second.version;
}

std::int64_t WorldState::SumQuantityByOwner(std::string_view owner) const {
  const bool all = owner == kAllOwners;
  std::int64_t sum = 0;
  for (const auto& [key, entry] : entries_) {
    if (all || entry.record.owner == owner) sum += entry.record.quantity;
  }
  return sum;
}

Bytes WorldState::Serialize() const {
  Encoder enc;
  enc.PutU64(entries_.size());
  for (const auto& [key, entry] : entries_) {
    enc.PutBytes(EncodeRecord(entry.record));
    enc.PutU64(entry.version);
  }
  return enc.Take();
}

}  // namespace dpledger::ledger
