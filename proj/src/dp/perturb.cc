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

#include "dpledger/dp/perturb.h"

#include <cassert>

namespace dpledger::dp {

absl::StatusOr<PerturbedResponse> PerturbBatch(
    std::span<const double> true_values, const PrivacyParams& params,
    NoiseSource& source) {
  if (auto status = ValidateParams(params); !status.ok()) return status;
  if (true_values.empty()) {
    return absl::InvalidArgumentError("perturb_batch needs at least one value");
  }
  const double lambda = params.sensitivity / params.epsilon;
  PerturbedResponse response;
  response.epsilon_used = params.epsilon;
  response.values.reserve(true_values.size());
  for (double value : true_values) {
    response.values.push_back(value +
                              SampleLaplace(source, params.mu, lambda));
  }
  return response;
}

double SumSensitivity(std::int64_t max_quantity) {
  assert(max_quantity >= 1);
  return static_cast<double>(max_quantity);
}

void BudgetTracker::Charge(std::string_view client_id, double epsilon) {
  auto it = totals_.find(client_id);
  if (it == totals_.end()) {
    totals_.emplace(std::string(client_id), epsilon);
  } else {
    it->second += epsilon;
  }
}

double BudgetTracker::Spent(std::string_view client_id) const {
  auto it = totals_.find(client_id);
  return it == totals_.end() ? 0.0 : it->second;
}

}  // namespace dpledger::dp
