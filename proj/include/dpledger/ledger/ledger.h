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

#ifndef DPLEDGER_LEDGER_LEDGER_H_
#define DPLEDGER_LEDGER_LEDGER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dpledger/ledger/world_state.h"
#include "dpledger/types.h"

namespace dpledger::ledger {

// Digest over the canonical (number, prev_hash, txs) encoding.
Digest HashBlock(const Block& block);

// Builds block `number` on top of `prev_hash` and stamps its hash. Validity
// flags are left empty for the committer to fill.
Block MakeBlock(std::uint64_t number, const Digest& prev_hash,
                std::vector<Transaction> txs);

// Block 0: no transactions, all-zero prev_hash.
Block MakeGenesis();

// Applies the valid transactions of `block` to `state`. Query transactions
// and flagged-invalid transactions leave the state untouched.
void ApplyBlock(const Block& block, WorldState& state);

// Append-only hash-chained block store plus the world state derived from it.
// One instance per (peer, channel). Not thread-safe: the owner serializes the
// commit path.
class Ledger {
 public:
  // Appends `block` if block.number equals the current height and prev_hash
  // equals the tip hash, and the stored block_hash recomputes. Returns the new
  // height. FailedPrecondition ("ChainMismatch: ...") otherwise.
  absl::StatusOr<std::uint64_t> Append(Block block);

  std::uint64_t height() const { return blocks_.size(); }
  // All-zero before genesis.
  Digest tip_hash() const;

  const std::vector<Block>& blocks() const { return blocks_; }
  const WorldState& state() const { return state_; }

  // Full-chain scan: every block_hash recomputes and links to its parent.
  absl::Status Verify() const;

  // Canonical bytes of the whole chain, for cross-peer comparison.
  Bytes SerializeChain() const;

 private:
  std::vector<Block> blocks_;
  WorldState state_;
};

absl::Status VerifyChain(std::span<const Block> blocks);

// Rebuilds the world state from block 0.
WorldState Replay(std::span<const Block> blocks);

}  // namespace dpledger::ledger

#endif  // DPLEDGER_LEDGER_LEDGER_H_
