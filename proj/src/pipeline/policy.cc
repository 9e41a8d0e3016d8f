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

#include "dpledger/pipeline/policy.h"

#include <algorithm>
#include <set>
#include <utility>

#include "dpledger/ledger/codec.h"
#include "dpledger/ledger/hash.h"

namespace dpledger::pipeline {

EndorsementPolicy EndorsementPolicy::AnyOf(int threshold,
                                           std::vector<std::string> orgs) {
  EndorsementPolicy p;
  p.kind = Kind::kThreshold;
  p.threshold = threshold;
  p.orgs = std::move(orgs);
  return p;
}

EndorsementPolicy EndorsementPolicy::TargetPeer(std::string peer_id) {
  EndorsementPolicy p;
  p.kind = Kind::kTargetPeer;
  p.target_peer = std::move(peer_id);
  return p;
}

bool EndorsementPolicy::WellFormed() const {
  if (kind == Kind::kTargetPeer) return !target_peer.empty();
  return threshold >= 1 && static_cast<std::size_t>(threshold) <= orgs.size();
}

Digest TxPayloadDigest(const Transaction& tx) {
  Transaction body = tx;
  body.endorsements.clear();
  return ledger::Sha256(ledger::EncodeTransaction(body));
}

Digest SignPayload(const std::string& peer_id, const Digest& payload_digest) {
  return ledger::KeyedDigest("peer-key:" + peer_id, payload_digest);
}

Endorsement MakeEndorsement(const std::string& peer_id,
                            const std::string& org_id, const Transaction& tx) {
  Endorsement e;
  e.peer_id = peer_id;
  e.org_id = org_id;
  e.payload_digest = TxPayloadDigest(tx);
  e.signature = SignPayload(peer_id, e.payload_digest);
  return e;
}

bool CheckPolicy(const EndorsementPolicy& policy,
                 std::span<const Endorsement> endorsements) {
  if (!policy.WellFormed() || endorsements.empty()) return false;
  const Digest& agreed = endorsements.front().payload_digest;
  for (const Endorsement& e : endorsements) {
    if (e.payload_digest != agreed) return false;
    if (e.signature != SignPayload(e.peer_id, e.payload_digest)) return false;
  }
  if (policy.kind == EndorsementPolicy::Kind::kTargetPeer) {
    return std::any_of(endorsements.begin(), endorsements.end(),
                       [&](const Endorsement& e) {
                         return e.peer_id == policy.target_peer;
                       });
  }
  std::set<std::string> covered;
  for (const Endorsement& e : endorsements) {
    if (std::find(policy.orgs.begin(), policy.orgs.end(), e.org_id) !=
        policy.orgs.end()) {
      covered.insert(e.org_id);
    }
  }
  return covered.size() >= static_cast<std::size_t>(policy.threshold);
}

bool VerifyEndorsedTx(const EndorsementPolicy& policy, const Transaction& tx) {
  if (!CheckPolicy(policy, tx.endorsements)) return false;
  return tx.endorsements.front().payload_digest == TxPayloadDigest(tx);
}

}  // namespace dpledger::pipeline
