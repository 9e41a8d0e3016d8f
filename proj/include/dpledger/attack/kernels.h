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

#ifndef DPLEDGER_ATTACK_KERNELS_H_
#define DPLEDGER_ATTACK_KERNELS_H_

// Monte-Carlo kernels. Every kernel has a serial reference and an OpenMP
// version that return identical results: randomness is drawn per trial (or
// per fixed-size block of samples) from seeds derived with MixSeed, so the
// partition across threads does not change any value.

#include <cstdint>
#include <span>
#include <vector>

#include "dpledger/attack/linking.h"

namespace dpledger::attack::kernels {

inline constexpr std::uint64_t kSampleBlock = 4096;

std::uint64_t CountSuccessesSerial(const AttackSetup& setup,
                                   std::uint64_t trials, std::uint64_t seed);
std::uint64_t CountSuccessesParallel(const AttackSetup& setup,
                                     std::uint64_t trials, std::uint64_t seed);

// `count` draws of center + Laplace(0, lambda). Block b of kSampleBlock
// samples uses NoiseSource(MixSeed(seed, b)).
std::vector<double> NoisySamplesSerial(double center, double lambda,
                                       std::uint64_t count, std::uint64_t seed);
std::vector<double> NoisySamplesParallel(double center, double lambda,
                                         std::uint64_t count,
                                         std::uint64_t seed);

// Equal-width bins over [lo, hi]; hi itself lands in the last bin, values
// outside the range are dropped.
std::vector<std::uint64_t> HistogramSerial(std::span<const double> samples,
                                           double lo, double hi, int bins);
std::vector<std::uint64_t> HistogramParallel(std::span<const double> samples,
                                             double lo, double hi, int bins);

}  // namespace dpledger::attack::kernels

#endif  // DPLEDGER_ATTACK_KERNELS_H_
