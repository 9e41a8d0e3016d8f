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

#include "dpledger/ledger/private_data.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "dpledger/ledger/codec.h"
#include "dpledger/ledger/hash.h"

namespace dpledger::ledger {

Digest RecordDigest(const PurchaseRecord& record) {
  return Sha256(EncodeRecord(record));
}

void PrivateDataCollection::Put(const PurchaseRecord& record) {
  digests_[record.key] = RecordDigest(record);
  data_[record.key] = record;
}

absl::StatusOr<PrivateDataCollection::ReadResult> PrivateDataCollection::Read(
    std::string_view peer_id, std::string_view key) const {
  auto it = data_.find(key);
  if (it == data_.end()) {
    return absl::NotFoundError(absl::StrCat("KeyAbsent: ", std::string(key)));
  }
  if (IsMember(peer_id)) return ReadResult(it->second);
  return ReadResult(digests_.find(key)->second);
}

bool PrivateDataCollection::DigestsConsistent() const {
  for (const auto& [key, record] : data_) {
    auto it = digests_.find(key);
    if (it == digests_.end() || it->second != RecordDigest(record)) {
      return false;
    }
  }
  return digests_.size() == data_.size();
}

}  // namespace dpledger::ledger
