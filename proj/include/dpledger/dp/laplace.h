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

#ifndef DPLEDGER_DP_LAPLACE_H_
#define DPLEDGER_DP_LAPLACE_H_

#include <cstdint>
#include <random>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace dpledger::dp {

// Laplace mechanism parameters. The noise scale is sensitivity / epsilon.
struct PrivacyParams {
  double epsilon = 1.0;
  double sensitivity = 1.0;
  double mu = 0.0;
};

// InvalidArgument ("InvalidParams: ...") unless epsilon and sensitivity are
// positive and finite and the resulting scale is finite.
absl::Status ValidateParams(const PrivacyParams& params);

absl::StatusOr<double> LaplaceScale(const PrivacyParams& params);

// (1 / 2 lambda) * exp(-|x - mu| / lambda). Requires lambda > 0.
double LaplacePdf(double x, double mu, double lambda);

double LaplaceCdf(double x, double mu, double lambda);

// Inverse CDF: maps u in (-1/2, 1/2) to mu - lambda * sgn(u) * ln(1 - 2|u|).
double LaplaceFromUniform(double u, double mu, double lambda);

// SplitMix64 finalizer over (base, stream). Used to hand out independent
// seeds for trials, workers and peers from one master seed.
std::uint64_t MixSeed(std::uint64_t base, std::uint64_t stream);

// Seeded uniform stream. Identical seeds give identical streams on every
// platform: the engine is mt19937_64 and the float conversion is done here
// rather than through a library distribution. Single owner; not thread-safe.
class NoiseSource {
 public:
  explicit NoiseSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  // Uniform on the open interval (-1/2, 1/2). The 2^-53 grid point -1/2 is
  // rejected and redrawn.
  double UniformCentered();

  std::uint64_t NextBits() { return engine_(); }
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// One inverse-CDF draw from Laplace(mu, lambda).
double SampleLaplace(NoiseSource& source, double mu, double lambda);

}  // namespace dpledger::dp

#endif  // DPLEDGER_DP_LAPLACE_H_
