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

#ifndef DPLEDGER_ATTACK_DP_CHECK_H_
#define DPLEDGER_ATTACK_DP_CHECK_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "dpledger/dp/laplace.h"
#include "dpledger/types.h"

namespace dpledger::attack {

struct DpCheckOptions {
  int bins = 50;
  // Bins where either histogram holds fewer samples are not compared.
  std::uint64_t min_bin_count = 100;
  // Two-sided 99% normal quantile for the per-bin proportion bounds.
  double z = 2.5758293035489004;
  // Share of compared bins that must stay within the slack-adjusted bound.
  double required_fraction = 0.99;
};

struct BinComparison {
  double lo = 0.0;
  double hi = 0.0;
  std::uint64_t count_d = 0;
  std::uint64_t count_d_prime = 0;
  // max(P[D]/P[D'], P[D']/P[D]) on this bin.
  double ratio = 0.0;
  // e^epsilon widened by the bin's sampling slack.
  double bound = 0.0;
  bool within = false;
};

struct DpCheckResult {
  double max_ratio = 0.0;
  double exp_epsilon = 0.0;
  std::size_t compared_bins = 0;
  std::size_t bins_within = 0;
  double fraction_within = 0.0;
  bool passed = false;
  std::vector<BinComparison> bins;
};

// Histograms `trials` mechanism outputs on D and on D' for the per-owner sum
// of `owner` and compares bin probabilities against e^epsilon.
//
// D and D' must differ by at most one record (added, removed or replaced)
// and their sums by at most the sensitivity; InvalidArgument
// ("NotAdjacent") otherwise. FailedPrecondition ("InsufficientSamples") when
// no bin reaches min_bin_count in both histograms.
absl::StatusOr<DpCheckResult> EmpiricalDpCheck(
    const dp::PrivacyParams& params, const std::vector<PurchaseRecord>& d,
    const std::vector<PurchaseRecord>& d_prime, const std::string& owner,
    std::uint64_t trials, std::uint64_t seed,
    const DpCheckOptions& options = {});

}  // namespace dpledger::attack

#endif  // DPLEDGER_ATTACK_DP_CHECK_H_
