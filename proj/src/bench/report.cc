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

#include "dpledger/bench/report.h"

#include <fstream>
#include <system_error>

#include "absl/strings/str_cat.h"
#include "dpledger/status_macros.h"
#include "fmt/format.h"

namespace dpledger::bench {

std::string BenchCsv(const std::vector<RoundMetrics>& rows) {
  std::string out =
      "round,rate,submitted,committed,failed,throughput,lat_min_ms,"
      "lat_avg_ms,lat_max_ms,epsilon,in_flight,mean_rel_err_pct\n";
  for (const auto& r : rows) {
    out += fmt::format(
        "{},{:.6f},{},{},{},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{},{:.6f}\n",
        r.round, r.rate, r.submitted, r.committed, r.failed, r.throughput,
        r.latency_min_ms, r.latency_avg_ms, r.latency_max_ms, r.epsilon,
        r.in_flight, r.error_stats.mean);
  }
  return out;
}

std::string SweepCsv(const std::vector<SweepRow>& rows) {
  std::string out =
      "epsilon,mean_rel_err_pct,accuracy_pct,trials,std_rel_err_pct\n";
  for (const auto& r : rows) {
    out += fmt::format("{:.6f},{:.6f},{:.6f},{},{:.6f}\n", r.epsilon,
                       r.mean_relative_error, r.accuracy, r.samples,
                       r.stddev_relative_error);
  }
  return out;
}

std::string AttackCsv(const std::vector<AttackRow>& rows) {
  std::string out = "epsilon,tolerance,success_rate,trials,scope,analytic\n";
  for (const auto& r : rows) {
    out += fmt::format("{:.6f},{:.6f},{:.6f},{},{},{:.6f}\n", r.epsilon,
                       r.tolerance, r.success_rate, r.trials, r.scope,
                       r.analytic);
  }
  return out;
}

std::string SeriesCsv(const std::vector<attack::SeriesPoint>& rows) {
  std::string out = "epsilon,trial,actual,noisy,relative_error\n";
  for (const auto& r : rows) {
    out += fmt::format("{:.6f},{},{:.6f},{:.6f},{:.6f}\n", r.epsilon, r.trial,
                       r.actual, r.noisy, r.relative_error);
  }
  return out;
}

std::string SummaryText(const Report& report) {
  std::string out;
  for (const auto& r : report.rounds) {
    out += fmt::format(
        "{} rate={:.6f} committed={}/{} throughput={:.6f} tx/s "
        "latency_avg={:.6f} ms\n",
        r.round, r.rate, r.committed, r.submitted, r.throughput,
        r.latency_avg_ms);
  }
  for (const auto& r : report.sweep) {
    out += fmt::format("sweep epsilon={:.6f} accuracy={:.6f}% samples={}\n",
                       r.epsilon, r.accuracy, r.samples);
  }
  for (const auto& r : report.attack) {
    out += fmt::format(
        "attack scope={} epsilon={:.6f} success={:.6f} analytic={:.6f}\n",
        r.scope, r.epsilon, r.success_rate, r.analytic);
  }
  if (!report.series.empty()) {
    out += fmt::format("series points={}\n", report.series.size());
  }
  return out;
}

absl::Status WriteFile(const std::filesystem::path& path,
                       const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::UnavailableError(
        absl::StrCat("IoFailure: cannot open ", path.string()));
  }
  out << contents;
  out.close();
  if (!out) {
    return absl::UnavailableError(
        absl::StrCat("IoFailure: write failed for ", path.string()));
  }
  return absl::OkStatus();
}

absl::Status EmitReport(const Report& report,
                        const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    return absl::UnavailableError(
        absl::StrCat("IoFailure: cannot create ", dir.string(), ": ",
                     ec.message()));
  }
  DPL_RETURN_IF_ERROR(WriteFile(dir / "bench.csv", BenchCsv(report.rounds)));
  DPL_RETURN_IF_ERROR(WriteFile(dir / "sweep.csv", SweepCsv(report.sweep)));
  DPL_RETURN_IF_ERROR(WriteFile(dir / "attack.csv", AttackCsv(report.attack)));
  DPL_RETURN_IF_ERROR(WriteFile(dir / "series.csv", SeriesCsv(report.series)));
  return WriteFile(dir / "summary.txt", SummaryText(report));
}

}  // namespace dpledger::bench
