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

#ifndef DPLEDGER_LEDGER_PRIVATE_DATA_H_
#define DPLEDGER_LEDGER_PRIVATE_DATA_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "absl/status/statusor.h"
#include "dpledger/types.h"

namespace dpledger::ledger {

// SHA-256 of the record's canonical encoding.
Digest RecordDigest(const PurchaseRecord& record);

// Records visible in cleartext to member peers only; everyone else sees the
// digest.
class PrivateDataCollection {
 public:
  using ReadResult = std::variant<PurchaseRecord, Digest>;

  explicit PrivateDataCollection(std::set<std::string, std::less<>> members)
      : members_(std::move(members)) {}

  void Put(const PurchaseRecord& record);

  bool IsMember(std::string_view peer_id) const {
    return members_.contains(peer_id);
  }

  // Members get the record, non-members the digest. NotFound ("KeyAbsent")
  // when the key was never stored.
  absl::StatusOr<ReadResult> Read(std::string_view peer_id,
                                  std::string_view key) const;

  // Recomputes every digest from its stored record.
  bool DigestsConsistent() const;

  std::size_t size() const { return data_.size(); }

 private:
  std::set<std::string, std::less<>> members_;
  std::map<std::string, PurchaseRecord, std::less<>> data_;
  std::map<std::string, Digest, std::less<>> digests_;
};

}  // namespace dpledger::ledger

#endif  // DPLEDGER_LEDGER_PRIVATE_DATA_H_
