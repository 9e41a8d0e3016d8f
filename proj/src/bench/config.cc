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

#include "dpledger/bench/config.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "fmt/format.h"

namespace dpledger::bench {
namespace {

std::string_view Trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

constexpr TimeNs Ms(double ms) { return static_cast<TimeNs>(std::llround(ms * 1e6)); }

absl::StatusOr<double> ParseDouble(std::string_view s) {
  std::string str(Trim(s));
  char* end = nullptr;
  const double v = std::strtod(str.c_str(), &end);
  if (str.empty() || end != str.c_str() + str.size()) {
    return absl::InvalidArgumentError(fmt::format("not a number: '{}'", s));
  }
  return v;
}

absl::StatusOr<std::int64_t> ParseInt(std::string_view s) {
  s = Trim(s);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    return absl::InvalidArgumentError(fmt::format("not an integer: '{}'", s));
  }
  return v;
}

absl::StatusOr<std::uint64_t> ParseU64(std::string_view s) {
  s = Trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    return absl::InvalidArgumentError(
        fmt::format("not an unsigned integer: '{}'", s));
  }
  return v;
}

absl::StatusOr<bool> ParseBool(std::string_view s) {
  const std::string v = Lower(Trim(s));
  if (v == "true" || v == "on" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "off" || v == "no" || v == "0") return false;
  return absl::InvalidArgumentError(fmt::format("not a boolean: '{}'", s));
}

std::vector<std::string> ParseList(std::string_view s) {
  std::vector<std::string> out;
  for (std::string_view item : Split(s, ',')) {
    item = Trim(item);
    if (!item.empty()) out.emplace_back(item);
  }
  return out;
}

absl::StatusOr<std::vector<double>> ParseDoubleList(std::string_view s) {
  std::vector<double> out;
  for (const std::string& item : ParseList(s)) {
    auto v = ParseDouble(item);
    if (!v.ok()) return v.status();
    out.push_back(*v);
  }
  return out;
}

using Setter = std::function<absl::Status(BenchConfig&, std::string_view)>;

template <typename T, typename Parser>
Setter Field(T BenchConfig::*member, Parser parse) {
  return [member, parse](BenchConfig& c, std::string_view v) -> absl::Status {
    auto parsed = parse(v);
    if (!parsed.ok()) return parsed.status();
    c.*member = static_cast<T>(*parsed);
    return absl::OkStatus();
  };
}

Setter StringList(std::vector<std::string> BenchConfig::*member) {
  return [member](BenchConfig& c, std::string_view v) {
    c.*member = ParseList(v);
    return absl::OkStatus();
  };
}

const std::map<std::string, Setter, std::less<>>& Setters() {
  static const auto* setters = new std::map<std::string, Setter, std::less<>>{
      {"workers", Field(&BenchConfig::workers, ParseInt)},
      {"init_tx_total", Field(&BenchConfig::init_tx_total, ParseInt)},
      {"rates", Field(&BenchConfig::rates, ParseDoubleList)},
      {"query_round_duration_s",
       Field(&BenchConfig::query_round_duration_s, ParseDouble)},
      {"epsilon_sweep", Field(&BenchConfig::epsilon_sweep, ParseDoubleList)},
      {"epsilon", Field(&BenchConfig::epsilon, ParseDouble)},
      {"sensitivity", Field(&BenchConfig::sensitivity, ParseDouble)},
      {"customers", StringList(&BenchConfig::customers)},
      {"colors", StringList(&BenchConfig::colors)},
      {"products", StringList(&BenchConfig::products)},
      {"quantity_min", Field(&BenchConfig::quantity_min, ParseInt)},
      {"quantity_max", Field(&BenchConfig::quantity_max, ParseInt)},
      {"master_seed", Field(&BenchConfig::master_seed, ParseU64)},
      {"batch_size", Field(&BenchConfig::batch_size, ParseInt)},
      {"batch_timeout_ms", Field(&BenchConfig::batch_timeout_ms, ParseDouble)},
      {"write_endorse_ms", Field(&BenchConfig::write_endorse_ms, ParseDouble)},
      {"query_endorse_ms", Field(&BenchConfig::query_endorse_ms, ParseDouble)},
      {"order_ms", Field(&BenchConfig::order_ms, ParseDouble)},
      {"validate_ms", Field(&BenchConfig::validate_ms, ParseDouble)},
      {"hop_ms", Field(&BenchConfig::hop_ms, ParseDouble)},
      {"clock",
       [](BenchConfig& c, std::string_view v) -> absl::Status {
         const std::string mode =
             Lower(Trim(v));
         if (mode == "virtual") {
           c.clock = pipeline::ClockMode::kVirtual;
         } else if (mode == "wall") {
           c.clock = pipeline::ClockMode::kWall;
         } else {
           return absl::InvalidArgumentError(
               fmt::format("clock must be virtual or wall, got '{}'", v));
         }
         return absl::OkStatus();
       }},
      {"noise", Field(&BenchConfig::noise, ParseBool)},
      {"reuse_responses", Field(&BenchConfig::reuse_responses, ParseBool)},
      {"repetitions", Field(&BenchConfig::repetitions, ParseInt)},
      {"query_rate", Field(&BenchConfig::query_rate, ParseDouble)},
      {"target_owner",
       [](BenchConfig& c, std::string_view v) {
         c.target_owner = std::string(Trim(v));
         return absl::OkStatus();
       }},
      {"tolerance", Field(&BenchConfig::tolerance, ParseDouble)},
      {"attack_trials", Field(&BenchConfig::attack_trials, ParseU64)},
      {"series_repetitions", Field(&BenchConfig::series_repetitions, ParseU64)},
      {"dp_trials", Field(&BenchConfig::dp_trials, ParseU64)},
      {"dp_bins", Field(&BenchConfig::dp_bins, ParseInt)},
  };
  return *setters;
}

}  // namespace

absl::Status BenchConfig::Validate() const {
  if (workers < 1 || init_tx_total < 0 || repetitions < 1 || batch_size < 1 ||
      dp_bins < 1) {
    return absl::InvalidArgumentError(
        "workers, repetitions, batch_size and dp_bins must be positive");
  }
  if (rates.empty() || !std::is_sorted(rates.begin(), rates.end()) ||
      rates.front() <= 0) {
    return absl::InvalidArgumentError(
        "rates must be non-empty, positive and ascending");
  }
  if (query_rate <= 0 || query_round_duration_s <= 0 || batch_timeout_ms <= 0) {
    return absl::InvalidArgumentError(
        "query_rate, query_round_duration_s and batch_timeout_ms must be "
        "positive");
  }
  if (epsilon_sweep.empty()) {
    return absl::InvalidArgumentError("epsilon_sweep must not be empty");
  }
  for (double e : epsilon_sweep) {
    if (!(e > 0)) return absl::InvalidArgumentError("epsilon must be positive");
  }
  if (!(epsilon > 0) || !(sensitivity > 0)) {
    return absl::InvalidArgumentError(
        "epsilon and sensitivity must be positive");
  }
  if (quantity_min < 1 || quantity_max > 100 || quantity_min > quantity_max) {
    return absl::InvalidArgumentError(
        "quantity range must lie within [1, 100]");
  }
  if (customers.empty() || colors.empty() || products.empty()) {
    return absl::InvalidArgumentError(
        "customers, colors and products must be non-empty");
  }
  if (write_endorse_ms < 0 || query_endorse_ms < 0 || order_ms < 0 ||
      validate_ms < 0 || hop_ms < 0) {
    return absl::InvalidArgumentError("delays must be non-negative");
  }
  return absl::OkStatus();
}

pipeline::NetworkConfig BenchConfig::ToNetworkConfig() const {
  pipeline::NetworkConfig net;
  net.orderer.batch_size = batch_size;
  net.orderer.batch_timeout = Ms(batch_timeout_ms);
  net.delays.write_endorse = Ms(write_endorse_ms);
  net.delays.query_endorse = Ms(query_endorse_ms);
  net.delays.order = Ms(order_ms);
  net.delays.validate_per_tx = Ms(validate_ms);
  net.delays.hop = Ms(hop_ms);
  net.chaincode.privacy = {epsilon, sensitivity, 0.0};
  net.chaincode.perturb = noise;
  net.chaincode.reuse_responses = reuse_responses;
  net.chaincode.rules.customers = customers;
  net.chaincode.rules.colors = colors;
  net.chaincode.rules.min_quantity = quantity_min;
  net.chaincode.rules.max_quantity = quantity_max;
  net.seed = master_seed;
  net.clock = clock;
  return net;
}

absl::StatusOr<BenchConfig> ParseConfig(std::string_view text,
                                        BenchConfig base) {
  int lineno = 0;
  for (std::string_view line : Split(text, '\n')) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      return absl::InvalidArgumentError(
          fmt::format("line {}: expected key = value", lineno));
    }
    const std::string_view key = Trim(line.substr(0, eq));
    const std::string_view value = line.substr(eq + 1);
    auto it = Setters().find(key);
    if (it == Setters().end()) {
      return absl::InvalidArgumentError(
          fmt::format("line {}: unknown key '{}'", lineno, key));
    }
    if (auto status = it->second(base, value); !status.ok()) {
      return absl::InvalidArgumentError(
          fmt::format("line {}: {}", lineno, std::string(status.message())));
    }
  }
  if (auto status = base.Validate(); !status.ok()) return status;
  return base;
}

absl::StatusOr<BenchConfig> LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    return absl::UnavailableError(
        fmt::format("IoFailure: cannot open {}", path.string()));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str());
}

}  // namespace dpledger::bench
