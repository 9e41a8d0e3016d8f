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

#include "dpledger/dp/laplace.h"

#include <cmath>

#include "absl/strings/str_cat.h"

namespace dpledger::dp {

absl::Status ValidateParams(const PrivacyParams& params) {
  if (!(params.epsilon > 0.0) || !std::isfinite(params.epsilon)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "InvalidParams: epsilon must be positive, got ", params.epsilon));
  }
  if (!(params.sensitivity > 0.0) || !std::isfinite(params.sensitivity)) {
    return absl::InvalidArgumentError(
        absl::StrCat("InvalidParams: sensitivity must be positive, got ",
                     params.sensitivity));
  }
  if (!std::isfinite(params.mu)) {
    return absl::InvalidArgumentError("InvalidParams: mu must be finite");
  }
  const double scale = params.sensitivity / params.epsilon;
  if (!std::isfinite(scale) || !(scale > 0.0)) {
    return absl::InvalidArgumentError(
        "InvalidParams: noise scale is not finite and positive");
  }
  return absl::OkStatus();
}

absl::StatusOr<double> LaplaceScale(const PrivacyParams& params) {
  if (auto status = ValidateParams(params); !status.ok()) return status;
  return params.sensitivity / params.epsilon;
}

double LaplacePdf(double x, double mu, double lambda) {
  return std::exp(-std::abs(x - mu) / lambda) / (2.0 * lambda);
}

double LaplaceCdf(double x, double mu, double lambda) {
  const double z = (x - mu) / lambda;
  return z < 0 ? 0.5 * std::exp(z) : 1.0 - 0.5 * std::exp(-z);
}

double LaplaceFromUniform(double u, double mu, double lambda) {
  if (u == 0.0) return mu;
  const double sign = u < 0 ? -1.0 : 1.0;
  return mu - lambda * sign * std::log1p(-2.0 * std::abs(u));
}

std::uint64_t MixSeed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double NoiseSource::UniformCentered() {
  for (;;) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53 - 0.5;
    if (u != -0.5) return u;
  }
}

double SampleLaplace(NoiseSource& source, double mu, double lambda) {
  return LaplaceFromUniform(source.UniformCentered(), mu, lambda);
}

}  // namespace dpledger::dp
