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

#ifndef DPLEDGER_PIPELINE_POLICY_H_
#define DPLEDGER_PIPELINE_POLICY_H_

#include <span>
#include <string>
#include <vector>

#include "dpledger/types.h"

namespace dpledger::pipeline {

// Either "at least `threshold` distinct orgs out of `orgs`" or "exactly the
// named peer".
struct EndorsementPolicy {
  enum class Kind { kThreshold, kTargetPeer };

  Kind kind = Kind::kThreshold;
  int threshold = 1;
  std::vector<std::string> orgs;
  std::string target_peer;

  static EndorsementPolicy AnyOf(int threshold, std::vector<std::string> orgs);
  static EndorsementPolicy TargetPeer(std::string peer_id);

  bool WellFormed() const;
};

// Digest over every transaction field except endorsements: the proposal, the
// response payload and the write set.
Digest TxPayloadDigest(const Transaction& tx);

// Peer-keyed digest standing in for a signature.
Digest SignPayload(const std::string& peer_id, const Digest& payload_digest);

Endorsement MakeEndorsement(const std::string& peer_id,
                            const std::string& org_id, const Transaction& tx);

// True iff every signature verifies, all payload digests agree, and the
// endorsers cover the policy.
bool CheckPolicy(const EndorsementPolicy& policy,
                 std::span<const Endorsement> endorsements);

// CheckPolicy plus: the agreed payload digest recomputes from `tx`.
bool VerifyEndorsedTx(const EndorsementPolicy& policy, const Transaction& tx);

}  // namespace dpledger::pipeline

#endif  // DPLEDGER_PIPELINE_POLICY_H_
