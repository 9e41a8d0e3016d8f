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

#ifndef DPLEDGER_ATTACK_METRICS_H_
#define DPLEDGER_ATTACK_METRICS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "dpledger/chaincode/chaincode.h"
#include "dpledger/ledger/world_state.h"

namespace dpledger::attack {

// |actual - noisy| / actual * 100. InvalidArgument
// ("DivisionByZeroTrueValue") when actual is 0.
absl::StatusOr<double> RelativeError(double actual, double noisy);

struct ErrorStats {
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t count = 0;
};

// Sample mean and (n-1) standard deviation; zeros for an empty input.
ErrorStats Summarize(std::span<const double> values);

struct SeriesPoint {
  double epsilon = 0.0;
  std::uint64_t trial = 0;
  double actual = 0.0;
  double noisy = 0.0;
  double relative_error = 0.0;
};

// `repetitions` independent answers to the per-owner sum of `owner` at
// `epsilon`, paired with the harness-supplied `ground_truth`. Trial t is
// answered by a chaincode seeded with MixSeed(seed, t), so equal seeds at
// different epsilons share the same uniforms.
std::vector<SeriesPoint> PrivacySeries(const ledger::WorldState& state,
                                       chaincode::ChaincodeConfig config,
                                       const std::string& owner,
                                       double epsilon,
                                       std::uint64_t repetitions,
                                       std::uint64_t seed,
                                       double ground_truth);

}  // namespace dpledger::attack

#endif  // DPLEDGER_ATTACK_METRICS_H_
