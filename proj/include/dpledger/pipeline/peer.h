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

#ifndef DPLEDGER_PIPELINE_PEER_H_
#define DPLEDGER_PIPELINE_PEER_H_

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "dpledger/chaincode/chaincode.h"
#include "dpledger/ledger/ledger.h"
#include "dpledger/ledger/private_data.h"
#include "dpledger/pipeline/policy.h"
#include "dpledger/pipeline/simulator.h"
#include "dpledger/types.h"

namespace dpledger::pipeline {

// What one endorser returns: the executed transaction (write set or noisy
// response filled in) and its endorsement over it.
struct ProposalResponse {
  Transaction tx;
  Endorsement endorsement;
};

class Peer {
 public:
  Peer(std::string peer_id, std::string org_id,
       chaincode::ChaincodeConfig chaincode_config, std::uint64_t noise_seed,
       std::set<std::string, std::less<>> collection_members);

  const std::string& id() const { return id_; }
  const std::string& org() const { return org_; }

  // Executes the chaincode against committed state. Never mutates the ledger.
  absl::StatusOr<ProposalResponse> Endorse(const Transaction& proposal,
                                           TimeNs now);

  // Flags each transaction (endorsement policy, then per-key version check
  // with first-writer-wins inside the block), appends the block and applies
  // the valid writes. FailedPrecondition ("ChainMismatch") when the block
  // does not extend this peer's chain.
  absl::StatusOr<std::vector<bool>> ValidateAndCommit(
      Block block, const EndorsementPolicy& policy);

  const ledger::Ledger& ledger() const { return ledger_; }
  chaincode::Chaincode& chaincode() { return *chaincode_; }
  const ledger::PrivateDataCollection& collection() const {
    return collection_;
  }
  ServiceQueue& cpu() { return cpu_; }

 private:
  std::string id_;
  std::string org_;
  ledger::Ledger ledger_;
  std::unique_ptr<chaincode::Chaincode> chaincode_;
  ledger::PrivateDataCollection collection_;
  ServiceQueue cpu_;
};

}  // namespace dpledger::pipeline

#endif  // DPLEDGER_PIPELINE_PEER_H_
