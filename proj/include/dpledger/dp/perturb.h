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

#ifndef DPLEDGER_DP_PERTURB_H_
#define DPLEDGER_DP_PERTURB_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "dpledger/dp/laplace.h"
#include "dpledger/types.h"

namespace dpledger::dp {

// Adds an independent Laplace(mu, sensitivity / epsilon) draw to each true
// value, in order, from one sequentially advanced source. No rounding or
// clamping: negative outputs are possible.
absl::StatusOr<PerturbedResponse> PerturbBatch(
    std::span<const double> true_values, const PrivacyParams& params,
    NoiseSource& source);

// Record-level sensitivity of a sum whose contributions lie in
// [1, max_quantity]: removing one record moves the sum by at most
// max_quantity. Requires max_quantity >= 1.
double SumSensitivity(std::int64_t max_quantity);

// Cumulative epsilon per client. Observed and reported, never enforced.
class BudgetTracker {
 public:
  void Charge(std::string_view client_id, double epsilon);
  double Spent(std::string_view client_id) const;
  const std::map<std::string, double, std::less<>>& totals() const {
    return totals_;
  }

 private:
  std::map<std::string, double, std::less<>> totals_;
};

}  // namespace dpledger::dp

#endif  // DPLEDGER_DP_PERTURB_H_
