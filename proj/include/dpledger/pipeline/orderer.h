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

#ifndef DPLEDGER_PIPELINE_ORDERER_H_
#define DPLEDGER_PIPELINE_ORDERER_H_

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <vector>

#include "absl/status/status.h"
#include "dpledger/pipeline/policy.h"
#include "dpledger/types.h"

namespace dpledger::pipeline {

struct OrdererConfig {
  int batch_size = 10;
  TimeNs batch_timeout = 500'000'000;  // 500 ms

  bool Valid() const { return batch_size >= 1 && batch_timeout > 0; }
};

// Solo ordering service: FIFO queue, blocks cut by size or timeout.
class Orderer {
 public:
  Orderer(OrdererConfig config, EndorsementPolicy policy,
          const Digest& genesis_hash);

  // Enqueues an endorsed transaction. PermissionDenied
  // ("PolicyUnsatisfied") when its endorsements do not satisfy the policy.
  absl::Status Submit(Transaction tx, TimeNs now);

  // batch_size reached, or the oldest queued tx has waited batch_timeout.
  bool ReadyToCut(TimeNs now) const;

  // Next block with up to batch_size transactions in arrival order; nullopt
  // when the queue is empty.
  std::optional<Block> CutBlock();

  std::size_t queued() const { return queue_.size(); }
  std::optional<TimeNs> oldest_arrival() const;
  const OrdererConfig& config() const { return config_; }

  // Called with every transaction the orderer accepts.
  void AddTap(std::function<void(const Transaction&)> tap) {
    taps_.push_back(std::move(tap));
  }

 private:
  OrdererConfig config_;
  EndorsementPolicy policy_;
  std::uint64_t next_number_ = 1;
  Digest prev_hash_;
  std::deque<std::pair<Transaction, TimeNs>> queue_;
  std::vector<std::function<void(const Transaction&)>> taps_;
};

}  // namespace dpledger::pipeline

#endif  // DPLEDGER_PIPELINE_ORDERER_H_
