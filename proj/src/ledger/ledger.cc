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

#include "dpledger/ledger/ledger.h"

#include <utility>

#include "absl/strings/str_cat.h"
#include "dpledger/ledger/hash.h"

namespace dpledger::ledger {

Digest HashBlock(const Block& block) { return Sha256(EncodeBlockBody(block)); }

Block MakeBlock(std::uint64_t number, const Digest& prev_hash,
                std::vector<Transaction> txs) {
  Block block;
  block.number = number;
  block.prev_hash = prev_hash;
  block.txs = std::move(txs);
  block.block_hash = HashBlock(block);
  return block;
}

Block MakeGenesis() { return MakeBlock(0, kZeroDigest, {}); }

void ApplyBlock(const Block& block, WorldState& state) {
  for (std::size_t i = 0; i < block.txs.size(); ++i) {
    const bool valid = i < block.validity.size() && block.validity[i];
    const Transaction& tx = block.txs[i];
    if (!valid || tx.type == TxType::kQuery) continue;
    const auto* record = std::get_if<PurchaseRecord>(&tx.payload);
    if (record == nullptr) continue;
    for (const WriteEntry& w : tx.write_set) {
      if (w.key == record->key) state.Apply(*record, w.version);
    }
  }
}

absl::StatusOr<std::uint64_t> Ledger::Append(Block block) {
  if (block.number != height()) {
    return absl::FailedPreconditionError(
        absl::StrCat("ChainMismatch: block number ", block.number,
                     " but height is ", height()));
  }
  if (block.prev_hash != tip_hash()) {
    return absl::FailedPreconditionError(
        absl::StrCat("ChainMismatch: prev_hash of block ", block.number,
                     " does not match tip"));
  }
  if (HashBlock(block) != block.block_hash) {
    return absl::FailedPreconditionError(absl::StrCat(
        "ChainMismatch: block ", block.number, " hash does not recompute"));
  }
  ApplyBlock(block, state_);
  blocks_.push_back(std::move(block));
  return height();
}

Digest Ledger::tip_hash() const {
  return blocks_.empty() ? kZeroDigest : blocks_.back().block_hash;
}

absl::Status Ledger::Verify() const { return VerifyChain(blocks_); }

Bytes Ledger::SerializeChain() const {
  Encoder enc;
  enc.PutU64(blocks_.size());
  for (const Block& b : blocks_) enc.PutBytes(EncodeBlock(b));
  return enc.Take();
}

absl::Status VerifyChain(std::span<const Block> blocks) {
  Digest prev = kZeroDigest;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Block& b = blocks[i];
    if (b.number != i) {
      return absl::DataLossError(
          absl::StrCat("block at index ", i, " has number ", b.number));
    }
    if (b.prev_hash != prev) {
      return absl::DataLossError(
          absl::StrCat("block ", i, " prev_hash does not link to parent"));
    }
    if (HashBlock(b) != b.block_hash) {
      return absl::DataLossError(
          absl::StrCat("block ", i, " hash does not recompute"));
    }
    prev = b.block_hash;
  }
  return absl::OkStatus();
}

WorldState Replay(std::span<const Block> blocks) {
  WorldState state;
  for (const Block& b : blocks) ApplyBlock(b, state);
  return state;
}

}  // namespace dpledger::ledger
