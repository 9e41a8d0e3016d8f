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

#include "dpledger/attack/dp_check.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "absl/strings/str_cat.h"
#include "dpledger/attack/kernels.h"

namespace dpledger::attack {
namespace {

using RecordKey = std::tuple<std::string, std::string, std::string,
                             std::int64_t, std::string>;

RecordKey KeyOf(const PurchaseRecord& r) {
  return {r.key, r.product, r.owner, r.quantity, r.color};
}

// Number of records in `a` with no counterpart in `b`, as multisets.
std::size_t Unmatched(const std::vector<PurchaseRecord>& a,
                      const std::vector<PurchaseRecord>& b) {
  std::map<RecordKey, std::int64_t> counts;
  for (const auto& r : b) ++counts[KeyOf(r)];
  std::size_t unmatched = 0;
  for (const auto& r : a) {
    auto it = counts.find(KeyOf(r));
    if (it == counts.end() || it->second == 0) {
      ++unmatched;
    } else {
      --it->second;
    }
  }
  return unmatched;
}

double OwnerSum(const std::vector<PurchaseRecord>& records,
                const std::string& owner) {
  double sum = 0.0;
  for (const auto& r : records) {
    if (owner == kAllOwners || r.owner == owner) {
      sum += static_cast<double>(r.quantity);
    }
  }
  return sum;
}

// Upper bound on p_num / p_den allowed by e^eps and the 99% intervals of the
// two estimated proportions.
double SlackBound(double exp_eps, double p_num, double p_den, double n,
                  double z) {
  const double num_lo = p_num - z * std::sqrt(p_num * (1.0 - p_num) / n);
  const double den_hi = p_den + z * std::sqrt(p_den * (1.0 - p_den) / n);
  if (num_lo <= 0.0) return std::numeric_limits<double>::infinity();
  return exp_eps * (p_num / num_lo) * (den_hi / p_den);
}

}  // namespace

absl::StatusOr<DpCheckResult> EmpiricalDpCheck(
    const dp::PrivacyParams& params, const std::vector<PurchaseRecord>& d,
    const std::vector<PurchaseRecord>& d_prime, const std::string& owner,
    std::uint64_t trials, std::uint64_t seed, const DpCheckOptions& options) {
  auto lambda = dp::LaplaceScale(params);
  if (!lambda.ok()) return lambda.status();
  if (options.bins < 1 || trials == 0) {
    return absl::InvalidArgumentError("bins and trials must be positive");
  }
  if (Unmatched(d, d_prime) > 1 || Unmatched(d_prime, d) > 1) {
    return absl::InvalidArgumentError(
        "NotAdjacent: datasets differ in more than one record");
  }
  const double a = OwnerSum(d, owner);
  const double a_prime = OwnerSum(d_prime, owner);
  if (std::abs(a - a_prime) > params.sensitivity) {
    return absl::InvalidArgumentError(
        absl::StrCat("NotAdjacent: sums differ by ", std::abs(a - a_prime),
                     " > sensitivity ", params.sensitivity));
  }

  const auto samples_d =
      kernels::NoisySamplesParallel(a, *lambda, trials, dp::MixSeed(seed, 0));
  const auto samples_dp = kernels::NoisySamplesParallel(
      a_prime, *lambda, trials, dp::MixSeed(seed, 1));
  const auto [min_d, max_d] =
      std::minmax_element(samples_d.begin(), samples_d.end());
  const auto [min_dp, max_dp] =
      std::minmax_element(samples_dp.begin(), samples_dp.end());
  const double lo = std::min(*min_d, *min_dp);
  const double hi = std::max(*max_d, *max_dp);
  const auto hist_d =
      kernels::HistogramParallel(samples_d, lo, hi, options.bins);
  const auto hist_dp =
      kernels::HistogramParallel(samples_dp, lo, hi, options.bins);

  DpCheckResult result;
  result.exp_epsilon = std::exp(params.epsilon);
  const double n = static_cast<double>(trials);
  const double width = (hi - lo) / options.bins;
  for (int b = 0; b < options.bins; ++b) {
    const std::uint64_t c1 = hist_d[b];
    const std::uint64_t c2 = hist_dp[b];
    if (c1 < options.min_bin_count || c2 < options.min_bin_count) continue;
    const double p1 = c1 / n;
    const double p2 = c2 / n;
    BinComparison cmp;
    cmp.lo = lo + b * width;
    cmp.hi = cmp.lo + width;
    cmp.count_d = c1;
    cmp.count_d_prime = c2;
    const double forward = p1 / p2;
    const double backward = p2 / p1;
    const double forward_bound =
        SlackBound(result.exp_epsilon, p1, p2, n, options.z);
    const double backward_bound =
        SlackBound(result.exp_epsilon, p2, p1, n, options.z);
    if (forward >= backward) {
      cmp.ratio = forward;
      cmp.bound = forward_bound;
    } else {
      cmp.ratio = backward;
      cmp.bound = backward_bound;
    }
    cmp.within = forward <= forward_bound && backward <= backward_bound;
    result.max_ratio = std::max(result.max_ratio, cmp.ratio);
    ++result.compared_bins;
    if (cmp.within) ++result.bins_within;
    result.bins.push_back(cmp);
  }
  if (result.compared_bins == 0) {
    return absl::FailedPreconditionError(absl::StrCat(
        "InsufficientSamples: no bin holds ", options.min_bin_count,
        " samples in both histograms"));
  }
  result.fraction_within = static_cast<double>(result.bins_within) /
                           static_cast<double>(result.compared_bins);
  result.passed = result.fraction_within >= options.required_fraction;
  return result;
}

}  // namespace dpledger::attack
