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

#ifndef DPLEDGER_BENCH_REPORT_H_
#define DPLEDGER_BENCH_REPORT_H_

#include <filesystem>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "dpledger/attack/metrics.h"
#include "dpledger/bench/rounds.h"

namespace dpledger::bench {

struct Report {
  std::vector<RoundMetrics> rounds;
  std::vector<SweepRow> sweep;
  std::vector<AttackRow> attack;
  std::vector<attack::SeriesPoint> series;
};

// CSV bodies with fixed six-decimal floats. Empty inputs give the header
// line only.
std::string BenchCsv(const std::vector<RoundMetrics>& rows);
std::string SweepCsv(const std::vector<SweepRow>& rows);
std::string AttackCsv(const std::vector<AttackRow>& rows);
std::string SeriesCsv(const std::vector<attack::SeriesPoint>& rows);
std::string SummaryText(const Report& report);

// Writes `contents` to `path`. Unavailable ("IoFailure") on any error.
absl::Status WriteFile(const std::filesystem::path& path,
                       const std::string& contents);

// bench.csv, sweep.csv, attack.csv, series.csv and summary.txt under `dir`,
// which is created if needed.
absl::Status EmitReport(const Report& report,
                        const std::filesystem::path& dir);

}  // namespace dpledger::bench

#endif  // DPLEDGER_BENCH_REPORT_H_
