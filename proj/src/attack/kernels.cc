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

#include "dpledger/attack/kernels.h"

#include <algorithm>
#include <cmath>

#include "dpledger/dp/laplace.h"

namespace dpledger::attack::kernels {
namespace {

void FillBlock(double center, double lambda, std::uint64_t seed,
               std::uint64_t block, std::uint64_t count, double* out) {
  dp::NoiseSource source(dp::MixSeed(seed, block));
  const std::uint64_t begin = block * kSampleBlock;
  const std::uint64_t end = std::min(count, begin + kSampleBlock);
  for (std::uint64_t i = begin; i < end; ++i) {
    out[i] = center + dp::SampleLaplace(source, 0.0, lambda);
  }
}

inline int BinOf(double x, double lo, double width, int bins) {
  int b = static_cast<int>((x - lo) / width);
  return b >= bins ? bins - 1 : b;
}

}  // namespace

std::uint64_t CountSuccessesSerial(const AttackSetup& setup,
                                   std::uint64_t trials, std::uint64_t seed) {
  std::uint64_t successes = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    if (RunTrial(setup, seed, t).success) ++successes;
  }
  return successes;
}

std::uint64_t CountSuccessesParallel(const AttackSetup& setup,
                                     std::uint64_t trials, std::uint64_t seed) {
  std::uint64_t successes = 0;
  const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(static) reduction(+ : successes)
  for (std::int64_t t = 0; t < n; ++t) {
    if (RunTrial(setup, seed, static_cast<std::uint64_t>(t)).success) {
      ++successes;
    }
  }
  return successes;
}

std::vector<double> NoisySamplesSerial(double center, double lambda,
                                       std::uint64_t count,
                                       std::uint64_t seed) {
  std::vector<double> out(count);
  const std::uint64_t blocks = (count + kSampleBlock - 1) / kSampleBlock;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    FillBlock(center, lambda, seed, b, count, out.data());
  }
  return out;
}

std::vector<double> NoisySamplesParallel(double center, double lambda,
                                         std::uint64_t count,
                                         std::uint64_t seed) {
  std::vector<double> out(count);
  const auto blocks =
      static_cast<std::int64_t>((count + kSampleBlock - 1) / kSampleBlock);
  double* data = out.data();
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    FillBlock(center, lambda, seed, static_cast<std::uint64_t>(b), count, data);
  }
  return out;
}

std::vector<std::uint64_t> HistogramSerial(std::span<const double> samples,
                                           double lo, double hi, int bins) {
  std::vector<std::uint64_t> hist(bins, 0);
  const double width = (hi - lo) / bins;
  for (double x : samples) {
    if (x < lo || x > hi) continue;
    ++hist[BinOf(x, lo, width, bins)];
  }
  return hist;
}

std::vector<std::uint64_t> HistogramParallel(std::span<const double> samples,
                                             double lo, double hi, int bins) {
  std::vector<std::uint64_t> hist(bins, 0);
  const double width = (hi - lo) / bins;
  const auto n = static_cast<std::int64_t>(samples.size());
  const double* data = samples.data();
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(bins, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      const double x = data[i];
      if (x < lo || x > hi) continue;
      ++local[BinOf(x, lo, width, bins)];
    }
#pragma omp critical
    for (int b = 0; b < bins; ++b) hist[b] += local[b];
  }
  return hist;
}

}  // namespace dpledger::attack::kernels
