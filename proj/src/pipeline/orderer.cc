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

#include "dpledger/pipeline/orderer.h"

#include <utility>

#include "absl/strings/str_cat.h"
#include "dpledger/ledger/ledger.h"

namespace dpledger::pipeline {

Orderer::Orderer(OrdererConfig config, EndorsementPolicy policy,
                 const Digest& genesis_hash)
    : config_(config), policy_(std::move(policy)), prev_hash_(genesis_hash) {}

absl::Status Orderer::Submit(Transaction tx, TimeNs now) {
  if (!CheckPolicy(policy_, tx.endorsements)) {
    return absl::PermissionDeniedError(
        absl::StrCat("PolicyUnsatisfied: ", tx.tx_id));
  }
  for (const auto& tap : taps_) tap(tx);
  queue_.emplace_back(std::move(tx), now);
  return absl::OkStatus();
}

bool Orderer::ReadyToCut(TimeNs now) const {
  if (queue_.empty()) return false;
  return queue_.size() >= static_cast<std::size_t>(config_.batch_size) ||
         now - queue_.front().second >= config_.batch_timeout;
}

std::optional<Block> Orderer::CutBlock() {
  if (queue_.empty()) return std::nullopt;
  std::vector<Transaction> txs;
  while (!queue_.empty() &&
         txs.size() < static_cast<std::size_t>(config_.batch_size)) {
    txs.push_back(std::move(queue_.front().first));
    queue_.pop_front();
  }
  Block block = ledger::MakeBlock(next_number_++, prev_hash_, std::move(txs));
  prev_hash_ = block.block_hash;
  return block;
}

std::optional<TimeNs> Orderer::oldest_arrival() const {
  if (queue_.empty()) return std::nullopt;
  return queue_.front().second;
}

}  // namespace dpledger::pipeline
