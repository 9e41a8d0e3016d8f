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

#ifndef DPLEDGER_TYPES_H_
#define DPLEDGER_TYPES_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dpledger {

// SHA-256 output. The all-zero value is the genesis block's prev_hash.
using Digest = std::array<std::uint8_t, 32>;

inline constexpr Digest kZeroDigest{};

// Virtual or wall-clock timestamp in nanoseconds since the start of a run.
using TimeNs = std::int64_t;

// One supply-chain purchase: the ledger's row.
struct PurchaseRecord {
  std::string key;
  std::string product;
  std::string owner;
  std::int64_t quantity = 0;
  std::string color;

  friend bool operator==(const PurchaseRecord&, const PurchaseRecord&) = default;
};

enum class Aggregate : std::uint8_t { kSum = 0 };

// Owner selector matching every record. Used by the total-sum variant of the
// linking attack.
inline constexpr std::string_view kAllOwners = "*";

struct SumQuery {
  Aggregate aggregate = Aggregate::kSum;
  std::string owner;

  friend bool operator==(const SumQuery&, const SumQuery&) = default;
};

// The statistical query set submitted by a client, f_1 ... f_n.
struct QuerySpec {
  std::vector<SumQuery> queries;
  std::optional<double> requested_epsilon;

  friend bool operator==(const QuerySpec&, const QuerySpec&) = default;
};

// Noisy answers f*_1 ... f*_n. Never holds the true answers or the noise.
struct PerturbedResponse {
  std::vector<double> values;
  double epsilon_used = 0.0;

  friend bool operator==(const PerturbedResponse&,
                         const PerturbedResponse&) = default;
};

// Query transaction payload as it is logged on the chain.
struct QueryLogEntry {
  QuerySpec spec;
  Digest spec_digest{};
  PerturbedResponse response;
  TimeNs response_time = 0;

  friend bool operator==(const QueryLogEntry&, const QueryLogEntry&) = default;
};

enum class TxType : std::uint8_t { kInit = 0, kWrite = 1, kQuery = 2 };

const char* TxTypeName(TxType type);

// One entry of an endorsed write set. `version` is the key's committed
// version plus one at endorsement time.
struct WriteEntry {
  std::string key;
  std::uint64_t version = 0;

  friend bool operator==(const WriteEntry&, const WriteEntry&) = default;
};

struct Endorsement {
  std::string peer_id;
  std::string org_id;
  // Digest over (proposal, response payload, write set). Endorsers that
  // executed identically produce identical payload digests.
  Digest payload_digest{};
  // Peer-keyed digest over payload_digest; stands in for a signature.
  Digest signature{};

  friend bool operator==(const Endorsement&, const Endorsement&) = default;
};

using TxPayload = std::variant<PurchaseRecord, QueryLogEntry>;

struct Transaction {
  std::string tx_id;
  TxType type = TxType::kWrite;
  TxPayload payload;
  std::string client_id;
  TimeNs submit_time = 0;
  std::vector<WriteEntry> write_set;
  std::vector<Endorsement> endorsements;

  friend bool operator==(const Transaction&, const Transaction&) = default;
};

struct Block {
  std::uint64_t number = 0;
  Digest prev_hash{};
  std::vector<Transaction> txs;
  // Filled in by the committing peer; not covered by block_hash.
  std::vector<bool> validity;
  Digest block_hash{};

  friend bool operator==(const Block&, const Block&) = default;
};

}  // namespace dpledger

#endif  // DPLEDGER_TYPES_H_
