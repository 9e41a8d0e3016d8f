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

#include "dpledger/pipeline/peer.h"

#include <map>
#include <utility>

#include "absl/strings/str_cat.h"

namespace dpledger::pipeline {

Peer::Peer(std::string peer_id, std::string org_id,
           chaincode::ChaincodeConfig chaincode_config,
           std::uint64_t noise_seed,
           std::set<std::string, std::less<>> collection_members)
    : id_(std::move(peer_id)),
      org_(std::move(org_id)),
      chaincode_(std::make_unique<chaincode::Chaincode>(
          std::move(chaincode_config), noise_seed)),
      collection_(std::move(collection_members)) {
  auto appended = ledger_.Append(ledger::MakeGenesis());
  (void)appended;
}

absl::StatusOr<ProposalResponse> Peer::Endorse(const Transaction& proposal,
                                               TimeNs now) {
  auto cls = chaincode::Classify(proposal);
  if (!cls.ok()) return cls.status();

  ProposalResponse out;
  out.tx = proposal;
  out.tx.endorsements.clear();
  out.tx.write_set.clear();
  if (*cls == chaincode::TxClass::kFinancial) {
    auto rw = chaincode_->ExecuteWrite(ledger_.state(),
                                       std::get<PurchaseRecord>(proposal.payload));
    if (!rw.ok()) return rw.status();
    out.tx.write_set = std::move(rw->writes);
  } else {
    const QuerySpec& spec = std::get<QueryLogEntry>(proposal.payload).spec;
    auto response =
        chaincode_->ExecuteQuery(ledger_.state(), spec, proposal.client_id);
    if (!response.ok()) return response.status();
    out.tx.payload = chaincode_->RecordResponse(spec, *response, now);
  }
  out.endorsement = MakeEndorsement(id_, org_, out.tx);
  return out;
}

absl::StatusOr<std::vector<bool>> Peer::ValidateAndCommit(
    Block block, const EndorsementPolicy& policy) {
  if (block.number != ledger_.height() || block.prev_hash != ledger_.tip_hash()) {
    return absl::FailedPreconditionError(absl::StrCat(
        "ChainMismatch: peer ", id_, " at height ", ledger_.height(),
        " received block ", block.number));
  }
  const ledger::WorldState& state = ledger_.state();
  std::map<std::string, std::uint64_t, std::less<>> in_block;
  std::vector<bool> flags(block.txs.size(), false);
  for (std::size_t i = 0; i < block.txs.size(); ++i) {
    const Transaction& tx = block.txs[i];
    auto cls = chaincode::Classify(tx);
    if (!cls.ok() || !VerifyEndorsedTx(policy, tx)) continue;
    bool ok = true;
    if (*cls == chaincode::TxClass::kFinancial) {
      const auto& record = std::get<PurchaseRecord>(tx.payload);
      ok = tx.write_set.size() == 1 && tx.write_set.front().key == record.key;
      for (const WriteEntry& w : tx.write_set) {
        auto it = in_block.find(w.key);
        const std::uint64_t current =
            it != in_block.end() ? it->second : state.Version(w.key);
        ok = ok && w.version == current + 1;
      }
      if (ok) {
        for (const WriteEntry& w : tx.write_set) in_block[w.key] = w.version;
      }
    }
    flags[i] = ok;
  }
  block.validity = flags;
  std::vector<PurchaseRecord> committed_records;
  for (std::size_t i = 0; i < block.txs.size(); ++i) {
    if (flags[i] && std::holds_alternative<PurchaseRecord>(block.txs[i].payload)) {
      committed_records.push_back(std::get<PurchaseRecord>(block.txs[i].payload));
    }
  }
  auto appended = ledger_.Append(std::move(block));
  if (!appended.ok()) return appended.status();
  for (const PurchaseRecord& r : committed_records) collection_.Put(r);
  return flags;
}

}  // namespace dpledger::pipeline
