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

#ifndef DPLEDGER_ATTACK_LINKING_H_
#define DPLEDGER_ATTACK_LINKING_H_

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "dpledger/chaincode/chaincode.h"
#include "dpledger/ledger/world_state.h"
#include "dpledger/types.h"

namespace dpledger::attack {

// Background knowledge: every purchase except the target's.
struct AdversaryKnowledge {
  std::vector<PurchaseRecord> known_records;
  std::string target_owner;
};

// Builds the knowledge set from the full record list by dropping the
// target's records.
AdversaryKnowledge KnowledgeExcluding(const std::vector<PurchaseRecord>& all,
                                      const std::string& target_owner);

enum class QueryScope {
  kPerOwner,   // the query asks for the target's own sum
  kAllOwners,  // the query asks for the grand total
};

// Per-owner: the observation is attributed to the target as-is. Total: the
// known contributions are subtracted.
double LinkingAttack(double observed, const AdversaryKnowledge& knowledge,
                     QueryScope scope);

struct AttackOutcome {
  double estimate = 0.0;
  double true_value = 0.0;
  double absolute_error = 0.0;
  bool success = false;
};

AttackOutcome Judge(double estimate, double true_value, double tolerance);

// One attack experiment: the victim channel's committed state, the
// chaincode configuration serving the query, and the harness-side truth.
struct AttackSetup {
  ledger::WorldState state;
  AdversaryKnowledge knowledge;
  chaincode::ChaincodeConfig chaincode;
  QueryScope scope = QueryScope::kPerOwner;
  double tolerance = 10.0;
  // Target's true sum, from the harness trace.
  double ground_truth = 0.0;
};

inline constexpr double kUnboundedTolerance =
    std::numeric_limits<double>::infinity();

// Runs trial `trial`: a fresh chaincode seeded from (seed, trial) answers
// the query, the adversary links it.
AttackOutcome RunTrial(const AttackSetup& setup, std::uint64_t seed,
                       std::uint64_t trial);

// Fraction of `trials` independent trials that succeed. Parallel over trials;
// the result does not depend on the thread count.
double AttackSuccessRate(const AttackSetup& setup, std::uint64_t trials,
                         std::uint64_t seed);

// Probability that |Laplace(0, lambda)| <= tolerance.
double AnalyticSuccessProbability(double lambda, double tolerance);

}  // namespace dpledger::attack

#endif  // DPLEDGER_ATTACK_LINKING_H_
