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

#include "dpledger/pipeline/network.h"

#include <set>
#include <utility>

#include "absl/strings/str_cat.h"
#include "dpledger/dp/laplace.h"
#include "dpledger/ledger/ledger.h"

namespace dpledger::pipeline {

struct Network::Pending {
  Transaction proposal;
  std::size_t outstanding = 0;
  std::vector<ProposalResponse> responses;
  std::string error;
  OutcomeCallback done;
  TxOutcome outcome;
  bool finished = false;
};

namespace {

std::vector<std::string> OrgNames(int n) {
  std::vector<std::string> orgs;
  for (int i = 1; i <= n; ++i) orgs.push_back(absl::StrCat("Org", i, "MSP"));
  return orgs;
}

}  // namespace

Network::Network(NetworkConfig config)
    : config_(std::move(config)),
      sim_(config_.clock),
      policy_(EndorsementPolicy::AnyOf(1, OrgNames(config_.num_orgs))),
      orderer_(config_.orderer, policy_, ledger::MakeGenesis().block_hash) {
  std::set<std::string, std::less<>> members;
  for (int i = 1; i <= config_.num_orgs; ++i) {
    members.insert(absl::StrCat("peer0.org", i));
  }
  for (int i = 1; i <= config_.num_orgs; ++i) {
    peers_.push_back(std::make_unique<Peer>(
        absl::StrCat("peer0.org", i), absl::StrCat("Org", i, "MSP"),
        config_.chaincode, dp::MixSeed(config_.seed, i - 1), members));
  }
}

Peer* Network::FindPeer(std::string_view peer_id) {
  for (auto& p : peers_) {
    if (p->id() == peer_id) return p.get();
  }
  return nullptr;
}

std::vector<std::string> Network::peer_ids() const {
  std::vector<std::string> ids;
  for (const auto& p : peers_) ids.push_back(p->id());
  return ids;
}

absl::StatusOr<std::vector<ProposalResponse>> Network::Propose(
    const Transaction& proposal, std::span<const std::string> targets) {
  if (targets.empty()) {
    return absl::InvalidArgumentError("proposal needs at least one target");
  }
  std::vector<Peer*> resolved;
  for (const std::string& id : targets) {
    Peer* p = FindPeer(id);
    if (p == nullptr) {
      return absl::NotFoundError(absl::StrCat("NoSuchPeer: ", id));
    }
    resolved.push_back(p);
  }
  std::vector<ProposalResponse> out;
  for (Peer* p : resolved) {
    auto r = p->Endorse(proposal, sim_.now());
    if (!r.ok()) return r.status();
    out.push_back(*std::move(r));
  }
  return out;
}

void Network::Submit(TimeNs at, Transaction proposal,
                     std::vector<std::string> targets, OutcomeCallback done) {
  sim_.At(at, [this, proposal = std::move(proposal),
               targets = std::move(targets),
               done = std::move(done)]() mutable {
    auto pending = std::make_shared<Pending>();
    proposal.submit_time = sim_.now();
    pending->proposal = std::move(proposal);
    pending->done = std::move(done);
    pending->outcome.tx_id = pending->proposal.tx_id;
    pending->outcome.type = pending->proposal.type;
    pending->outcome.client_id = pending->proposal.client_id;
    pending->outcome.submit_time = sim_.now();

    std::vector<Peer*> resolved;
    for (const std::string& id : targets) {
      Peer* p = FindPeer(id);
      if (p == nullptr) {
        pending->outcome.failure = absl::StrCat("NoSuchPeer: ", id);
        Finish(pending);
        return;
      }
      resolved.push_back(p);
    }
    if (resolved.empty()) {
      pending->outcome.failure = "no endorsement targets";
      Finish(pending);
      return;
    }
    pending->outstanding = resolved.size();
    const TimeNs cost = pending->proposal.type == TxType::kQuery
                            ? config_.delays.query_endorse
                            : config_.delays.write_endorse;
    for (Peer* p : resolved) {
      sim_.After(config_.delays.hop, [this, p, pending, cost] {
        const TimeNs finish = p->cpu().Reserve(sim_.now(), cost);
        sim_.At(finish, [this, p, pending] {
          auto response = p->Endorse(pending->proposal, sim_.now());
          sim_.After(config_.delays.hop,
                     [this, pending, response = std::move(response)]() mutable {
                       CollectEndorsement(pending, std::move(response));
                     });
        });
      });
    }
  });
}

void Network::CollectEndorsement(const std::shared_ptr<Pending>& pending,
                                 absl::StatusOr<ProposalResponse> response) {
  if (response.ok()) {
    pending->responses.push_back(*std::move(response));
  } else if (pending->error.empty()) {
    pending->error = std::string(response.status().message());
  }
  if (--pending->outstanding > 0) return;

  pending->outcome.endorse_time = sim_.now();
  if (!pending->error.empty()) {
    pending->outcome.failure = pending->error;
    Finish(pending);
    return;
  }
  Transaction tx = pending->responses.front().tx;
  for (const ProposalResponse& r : pending->responses) {
    tx.endorsements.push_back(r.endorsement);
  }
  if (const auto* entry = std::get_if<QueryLogEntry>(&tx.payload)) {
    pending->outcome.response = entry->response;
  }
  if (!CheckPolicy(policy_, tx.endorsements)) {
    pending->outcome.failure = absl::StrCat("PolicyUnsatisfied: ", tx.tx_id);
    Finish(pending);
    return;
  }
  pending->proposal = std::move(tx);
  pending->responses.clear();
  sim_.After(config_.delays.hop, [this, pending] { ArriveAtOrderer(pending); });
}

void Network::ArriveAtOrderer(const std::shared_ptr<Pending>& pending) {
  const TimeNs finish =
      orderer_cpu_.Reserve(sim_.now(), config_.delays.order);
  sim_.At(finish, [this, pending] {
    auto status = orderer_.Submit(pending->proposal, sim_.now());
    if (!status.ok()) {
      pending->outcome.failure = std::string(status.message());
      Finish(pending);
      return;
    }
    in_flight_[pending->proposal.tx_id] = pending;
    MaybeCut();
  });
}

void Network::MaybeCut() {
  while (orderer_.queued() >=
         static_cast<std::size_t>(orderer_.config().batch_size)) {
    ++timer_epoch_;
    timer_armed_ = false;
    Deliver(*orderer_.CutBlock());
  }
  ArmTimer();
}

void Network::ArmTimer() {
  if (timer_armed_ || orderer_.queued() == 0) return;
  timer_armed_ = true;
  const std::uint64_t epoch = timer_epoch_;
  const TimeNs due = *orderer_.oldest_arrival() + orderer_.config().batch_timeout;
  sim_.At(due, [this, epoch] {
    if (epoch != timer_epoch_) return;
    timer_armed_ = false;
    ++timer_epoch_;
    if (orderer_.ReadyToCut(sim_.now())) Deliver(*orderer_.CutBlock());
    ArmTimer();
  });
}

void Network::Deliver(Block block) {
  for (const auto& tap : block_taps_) tap(block);
  auto shared = std::make_shared<const Block>(std::move(block));
  const TimeNs cost =
      config_.delays.validate_per_tx * static_cast<TimeNs>(shared->txs.size());
  for (auto& peer : peers_) {
    Peer* p = peer.get();
    sim_.After(config_.delays.hop, [this, p, shared, cost] {
      const TimeNs finish = p->cpu().Reserve(sim_.now(), cost);
      sim_.At(finish, [this, p, shared] {
        auto flags = p->ValidateAndCommit(*shared, policy_);
        if (!flags.ok()) {
          ++commit_errors_;
          return;
        }
        if (++commit_counts_[shared->number] < peers_.size()) return;
        commit_counts_.erase(shared->number);
        for (std::size_t i = 0; i < shared->txs.size(); ++i) {
          auto it = in_flight_.find(shared->txs[i].tx_id);
          if (it == in_flight_.end()) continue;
          auto pending = it->second;
          in_flight_.erase(it);
          pending->outcome.commit_time = sim_.now();
          pending->outcome.committed = (*flags)[i];
          if (!(*flags)[i]) pending->outcome.failure = "invalidated at commit";
          Finish(pending);
        }
      });
    });
  }
}

void Network::Finish(const std::shared_ptr<Pending>& pending) {
  if (pending->finished) return;
  pending->finished = true;
  if (pending->done) pending->done(pending->outcome);
}

bool Network::Converged() const {
  if (peers_.empty()) return true;
  const auto chain = peers_.front()->ledger().SerializeChain();
  const auto state = peers_.front()->ledger().state().Serialize();
  for (const auto& p : peers_) {
    if (p->ledger().SerializeChain() != chain) return false;
    if (p->ledger().state().Serialize() != state) return false;
  }
  return true;
}

void Network::SetEpsilon(double epsilon) {
  for (auto& p : peers_) p->chaincode().SetEpsilon(epsilon);
}

void Network::ReseedPeers(std::uint64_t base) {
  for (std::size_t i = 0; i < peers_.size(); ++i) {
    peers_[i]->chaincode().Reseed(dp::MixSeed(base, i));
  }
}

}  // namespace dpledger::pipeline
