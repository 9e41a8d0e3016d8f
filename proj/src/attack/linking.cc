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

#include "dpledger/attack/linking.h"

#include <cmath>

#include "dpledger/attack/kernels.h"
#include "dpledger/dp/laplace.h"

namespace dpledger::attack {

AdversaryKnowledge KnowledgeExcluding(const std::vector<PurchaseRecord>& all,
                                      const std::string& target_owner) {
  AdversaryKnowledge k;
  k.target_owner = target_owner;
  for (const PurchaseRecord& r : all) {
    if (r.owner != target_owner) k.known_records.push_back(r);
  }
  return k;
}

double LinkingAttack(double observed, const AdversaryKnowledge& knowledge,
                     QueryScope scope) {
  if (scope == QueryScope::kPerOwner) return observed;
  double known = 0.0;
  for (const PurchaseRecord& r : knowledge.known_records) {
    known += static_cast<double>(r.quantity);
  }
  return observed - known;
}

AttackOutcome Judge(double estimate, double true_value, double tolerance) {
  AttackOutcome out;
  out.estimate = estimate;
  out.true_value = true_value;
  out.absolute_error = std::abs(estimate - true_value);
  out.success = out.absolute_error <= tolerance;
  return out;
}

AttackOutcome RunTrial(const AttackSetup& setup, std::uint64_t seed,
                       std::uint64_t trial) {
  chaincode::Chaincode cc(setup.chaincode, dp::MixSeed(seed, trial));
  QuerySpec spec;
  spec.queries.push_back(
      {Aggregate::kSum, setup.scope == QueryScope::kPerOwner
                            ? setup.knowledge.target_owner
                            : std::string(kAllOwners)});
  auto response = cc.ExecuteQuery(setup.state, spec, "adversary");
  const double observed = response.ok() ? response->values.front() : 0.0;
  return Judge(LinkingAttack(observed, setup.knowledge, setup.scope),
               setup.ground_truth, setup.tolerance);
}

double AttackSuccessRate(const AttackSetup& setup, std::uint64_t trials,
                         std::uint64_t seed) {
  if (trials == 0) return 0.0;
  return static_cast<double>(
             kernels::CountSuccessesParallel(setup, trials, seed)) /
         static_cast<double>(trials);
}

double AnalyticSuccessProbability(double lambda, double tolerance) {
  if (std::isinf(tolerance)) return 1.0;
  return 1.0 - std::exp(-tolerance / lambda);
}

}  // namespace dpledger::attack
