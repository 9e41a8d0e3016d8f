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

#ifndef DPLEDGER_CHAINCODE_CHAINCODE_H_
#define DPLEDGER_CHAINCODE_CHAINCODE_H_

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dpledger/dp/laplace.h"
#include "dpledger/dp/perturb.h"
#include "dpledger/ledger/world_state.h"
#include "dpledger/types.h"

namespace dpledger::chaincode {

struct ChaincodeConfig {
  std::string channel_id = "supplychain";
  // Peer-configured default (and maximum) epsilon, sensitivity and mean.
  dp::PrivacyParams privacy{0.5, 100.0, 0.0};
  // False runs the stock chaincode: query answers leave the peer unperturbed.
  bool perturb = true;
  // Serve repeated identical specs from recorded responses.
  bool reuse_responses = false;
  ledger::RecordRules rules;
};

enum class TxClass { kFinancial, kQuery };

// Init/Write -> Financial, Query -> Query. InvalidArgument ("UnknownType")
// when the payload variant does not match the declared type.
absl::StatusOr<TxClass> Classify(const Transaction& tx);

struct ReadWriteSet {
  std::vector<WriteEntry> reads;
  std::vector<WriteEntry> writes;
};

// InvalidArgument when the list is empty or an owner is empty;
// Unimplemented ("UnknownAggregate") for aggregates other than Sum.
absl::Status ValidateQuerySpec(const QuerySpec& spec);

// Digest keying the response-reuse cache: the canonical spec plus the epsilon
// actually applied.
Digest SpecDigest(const QuerySpec& spec, double epsilon);

// The contract each endorsing peer runs. True answers are computed into
// locals of ExecuteQuery and are never returned, logged or stored.
//
// Thread-safe: concurrent endorsements serialize on an internal mutex that
// guards the noise source, the reuse cache and the budget tracker.
class Chaincode {
 public:
  Chaincode(ChaincodeConfig config, std::uint64_t noise_seed);

  Chaincode(const Chaincode&) = delete;
  Chaincode& operator=(const Chaincode&) = delete;

  // Proposal-time execution of a write against committed state. The world
  // state is not modified; the write set carries the next version.
  absl::StatusOr<ReadWriteSet> ExecuteWrite(
      const ledger::WorldState& committed, const PurchaseRecord& record) const;

  // For each query, the true sum over committed state, then one batch
  // perturbation. Charges the effective epsilon to `client_id` unless the
  // response is served from the reuse cache.
  absl::StatusOr<PerturbedResponse> ExecuteQuery(
      const ledger::WorldState& committed, const QuerySpec& spec,
      std::string_view client_id = {});

  // Builds the Query transaction payload for `response` and, with reuse on,
  // makes it available to later identical specs.
  QueryLogEntry RecordResponse(const QuerySpec& spec,
                               const PerturbedResponse& response,
                               TimeNs now);

  // requested_epsilon when it does not exceed the configured epsilon,
  // otherwise the configured epsilon.
  double EffectiveEpsilon(const QuerySpec& spec) const;

  void Reseed(std::uint64_t seed);
  void SetEpsilon(double epsilon);

  const ChaincodeConfig& config() const { return config_; }
  double Spent(std::string_view client_id) const;

 private:
  ChaincodeConfig config_;
  mutable std::mutex mu_;
  dp::NoiseSource noise_;
  dp::BudgetTracker budget_;
  std::map<Digest, PerturbedResponse> reuse_cache_;
};

}  // namespace dpledger::chaincode

#endif  // DPLEDGER_CHAINCODE_CHAINCODE_H_
