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

#include "dpledger/attack/metrics.h"

#include <cmath>
#include <limits>

#include "dpledger/dp/laplace.h"

namespace dpledger::attack {

absl::StatusOr<double> RelativeError(double actual, double noisy) {
  if (actual == 0.0) {
    return absl::InvalidArgumentError(
        "DivisionByZeroTrueValue: relative error undefined for a zero answer");
  }
  return std::abs(actual - noisy) / actual * 100.0;
}

ErrorStats Summarize(std::span<const double> values) {
  ErrorStats s;
  s.count = values.size();
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return s;
}

std::vector<SeriesPoint> PrivacySeries(const ledger::WorldState& state,
                                       chaincode::ChaincodeConfig config,
                                       const std::string& owner,
                                       double epsilon,
                                       std::uint64_t repetitions,
                                       std::uint64_t seed,
                                       double ground_truth) {
  config.privacy.epsilon = epsilon;
  config.reuse_responses = false;
  QuerySpec spec;
  spec.queries.push_back({Aggregate::kSum, owner});

  std::vector<SeriesPoint> series(repetitions);
  const auto n = static_cast<std::int64_t>(repetitions);
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < n; ++t) {
    chaincode::Chaincode cc(config, dp::MixSeed(seed, t));
    auto response = cc.ExecuteQuery(state, spec, "analyst");
    SeriesPoint& p = series[t];
    p.epsilon = epsilon;
    p.trial = static_cast<std::uint64_t>(t);
    p.actual = ground_truth;
    p.noisy = response.ok() ? response->values.front()
                            : std::numeric_limits<double>::quiet_NaN();
    auto rel = RelativeError(p.actual, p.noisy);
    p.relative_error =
        rel.ok() ? *rel : std::numeric_limits<double>::quiet_NaN();
  }
  return series;
}

}  // namespace dpledger::attack
