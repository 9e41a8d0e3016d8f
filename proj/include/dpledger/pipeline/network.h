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

#ifndef DPLEDGER_PIPELINE_NETWORK_H_
#define DPLEDGER_PIPELINE_NETWORK_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "dpledger/chaincode/chaincode.h"
#include "dpledger/pipeline/orderer.h"
#include "dpledger/pipeline/peer.h"
#include "dpledger/pipeline/policy.h"
#include "dpledger/pipeline/simulator.h"

namespace dpledger::pipeline {

// Per-transaction processing costs. Each peer is one FIFO server shared by
// endorsement and validation; the orderer is another.
struct DelayConfig {
  TimeNs write_endorse = 0;
  TimeNs query_endorse = 0;
  TimeNs order = 0;
  TimeNs validate_per_tx = 0;
  TimeNs hop = 0;  // one-way message latency
};

struct NetworkConfig {
  int num_orgs = 2;  // one peer per org
  OrdererConfig orderer;
  DelayConfig delays;
  chaincode::ChaincodeConfig chaincode;
  std::uint64_t seed = 1;
  ClockMode clock = ClockMode::kVirtual;
};

// Client-side view of one transaction once it has committed or failed.
struct TxOutcome {
  std::string tx_id;
  TxType type = TxType::kWrite;
  std::string client_id;
  TimeNs submit_time = 0;
  TimeNs endorse_time = 0;
  TimeNs commit_time = 0;
  bool committed = false;
  std::string failure;
  // Present for query transactions that were endorsed.
  std::optional<PerturbedResponse> response;
};

using OutcomeCallback = std::function<void(const TxOutcome&)>;

// Channel with N peers, a solo orderer and in-process message passing over a
// shared Simulator.
class Network {
 public:
  explicit Network(NetworkConfig config);

  std::size_t num_peers() const { return peers_.size(); }
  Peer& peer(std::size_t i) { return *peers_[i]; }
  const Peer& peer(std::size_t i) const { return *peers_[i]; }
  Peer* FindPeer(std::string_view peer_id);
  std::vector<std::string> peer_ids() const;

  const EndorsementPolicy& policy() const { return policy_; }
  Orderer& orderer() { return orderer_; }
  Simulator& sim() { return sim_; }
  const NetworkConfig& config() const { return config_; }

  // Phases 1-2 run synchronously: every target executes the proposal against
  // its committed state. NotFound ("NoSuchPeer") for an unknown target.
  absl::StatusOr<std::vector<ProposalResponse>> Propose(
      const Transaction& proposal, std::span<const std::string> targets);

  // Schedules the full pipeline for `proposal` at time `at`. `done` fires
  // exactly once, after every peer committed the tx or it failed.
  void Submit(TimeNs at, Transaction proposal,
              std::vector<std::string> targets, OutcomeCallback done);

  void Run() { sim_.Run(); }

  // Every peer holds the same chain bytes and world state.
  bool Converged() const;

  void SetEpsilon(double epsilon);
  // Peer i's noise source becomes MixSeed(base, i).
  void ReseedPeers(std::uint64_t base);

  // Observers for orderer-visible traffic.
  void AddOrdererTap(std::function<void(const Transaction&)> tap) {
    orderer_.AddTap(std::move(tap));
  }
  void AddBlockTap(std::function<void(const Block&)> tap) {
    block_taps_.push_back(std::move(tap));
  }

  std::size_t commit_errors() const { return commit_errors_; }

 private:
  struct Pending;

  void CollectEndorsement(const std::shared_ptr<Pending>& pending,
                          absl::StatusOr<ProposalResponse> response);
  void ArriveAtOrderer(const std::shared_ptr<Pending>& pending);
  void MaybeCut();
  void ArmTimer();
  void Deliver(Block block);
  void Finish(const std::shared_ptr<Pending>& pending);

  NetworkConfig config_;
  Simulator sim_;
  std::vector<std::unique_ptr<Peer>> peers_;
  EndorsementPolicy policy_;
  Orderer orderer_;
  ServiceQueue orderer_cpu_;
  std::uint64_t timer_epoch_ = 0;
  bool timer_armed_ = false;
  std::map<std::string, std::shared_ptr<Pending>> in_flight_;
  std::map<std::uint64_t, std::size_t> commit_counts_;
  std::vector<std::function<void(const Block&)>> block_taps_;
  std::size_t commit_errors_ = 0;
};

}  // namespace dpledger::pipeline

#endif  // DPLEDGER_PIPELINE_NETWORK_H_
