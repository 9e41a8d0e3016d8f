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

#include "dpledger/chaincode/chaincode.h"

#include <utility>

#include "absl/strings/str_cat.h"
#include "dpledger/ledger/codec.h"
#include "dpledger/ledger/hash.h"

namespace dpledger::chaincode {

absl::StatusOr<TxClass> Classify(const Transaction& tx) {
  switch (tx.type) {
    case TxType::kInit:
    case TxType::kWrite:
      if (std::holds_alternative<PurchaseRecord>(tx.payload)) {
        return TxClass::kFinancial;
      }
      break;
    case TxType::kQuery:
      if (std::holds_alternative<QueryLogEntry>(tx.payload)) {
        return TxClass::kQuery;
      }
      break;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("UnknownType: ", TxTypeName(tx.type),
                   " transaction with mismatched payload"));
}

absl::Status ValidateQuerySpec(const QuerySpec& spec) {
  if (spec.queries.empty()) {
    return absl::InvalidArgumentError("InvalidQuery: empty query list");
  }
  for (const SumQuery& q : spec.queries) {
    if (q.aggregate != Aggregate::kSum) {
      return absl::UnimplementedError(
          absl::StrCat("UnknownAggregate: code ",
                       static_cast<int>(q.aggregate)));
    }
    if (q.owner.empty()) {
      return absl::InvalidArgumentError("InvalidQuery: empty owner");
    }
  }
  return absl::OkStatus();
}

Digest SpecDigest(const QuerySpec& spec, double epsilon) {
  ledger::Encoder enc;
  enc.PutBytes(ledger::EncodeQuerySpec(spec));
  enc.PutF64(epsilon);
  return ledger::Sha256(enc.bytes());
}

Chaincode::Chaincode(ChaincodeConfig config, std::uint64_t noise_seed)
    : config_(std::move(config)), noise_(noise_seed) {}

absl::StatusOr<ReadWriteSet> Chaincode::ExecuteWrite(
    const ledger::WorldState& committed, const PurchaseRecord& record) const {
  if (auto status = ledger::ValidateRecord(config_.rules, record);
      !status.ok()) {
    return status;
  }
  ReadWriteSet rw;
  rw.writes.push_back({record.key, committed.Version(record.key) + 1});
  return rw;
}

double Chaincode::EffectiveEpsilon(const QuerySpec& spec) const {
  const double configured = config_.privacy.epsilon;
  if (spec.requested_epsilon && *spec.requested_epsilon > 0.0 &&
      *spec.requested_epsilon <= configured) {
    return *spec.requested_epsilon;
  }
  return configured;
}

absl::StatusOr<PerturbedResponse> Chaincode::ExecuteQuery(
    const ledger::WorldState& committed, const QuerySpec& spec,
    std::string_view client_id) {
  if (auto status = ValidateQuerySpec(spec); !status.ok()) return status;
  dp::PrivacyParams params = config_.privacy;
  params.epsilon = EffectiveEpsilon(spec);
  if (auto status = dp::ValidateParams(params); !status.ok()) return status;

  std::lock_guard<std::mutex> lock(mu_);
  if (config_.reuse_responses) {
    auto it = reuse_cache_.find(SpecDigest(spec, params.epsilon));
    if (it != reuse_cache_.end()) return it->second;
  }

  std::vector<double> truth;
  truth.reserve(spec.queries.size());
  for (const SumQuery& q : spec.queries) {
    truth.push_back(static_cast<double>(committed.SumQuantityByOwner(q.owner)));
  }
  if (!config_.perturb) {
    return PerturbedResponse{std::move(truth), 0.0};
  }
  auto response = dp::PerturbBatch(truth, params, noise_);
  if (response.ok()) budget_.Charge(client_id, params.epsilon);
  return response;
}

QueryLogEntry Chaincode::RecordResponse(const QuerySpec& spec,
                                        const PerturbedResponse& response,
                                        TimeNs now) {
  QueryLogEntry entry;
  entry.spec = spec;
  entry.spec_digest = SpecDigest(spec, EffectiveEpsilon(spec));
  entry.response = response;
  entry.response_time = now;
  if (config_.reuse_responses) {
    std::lock_guard<std::mutex> lock(mu_);
    reuse_cache_.emplace(entry.spec_digest, response);
  }
  return entry;
}

void Chaincode::Reseed(std::uint64_t seed) {
  std::lock_guard<std::mutex> lock(mu_);
  noise_ = dp::NoiseSource(seed);
}

void Chaincode::SetEpsilon(double epsilon) {
  std::lock_guard<std::mutex> lock(mu_);
  config_.privacy.epsilon = epsilon;
  reuse_cache_.clear();
}

double Chaincode::Spent(std::string_view client_id) const {
  std::lock_guard<std::mutex> lock(mu_);
  return budget_.Spent(client_id);
}

}  // namespace dpledger::chaincode
