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

#include "dpledger/ledger/snapshot.h"

#include <fstream>
#include <string>

#include "absl/strings/str_cat.h"
#include "dpledger/ledger/codec.h"
#include "dpledger/ledger/hash.h"

namespace dpledger::ledger {

absl::Status WriteSnapshot(std::span<const Block> blocks,
                           const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::UnavailableError(
        absl::StrCat("IoFailure: cannot open ", path.string()));
  }
  for (const Block& b : blocks) out << ToHex(EncodeBlock(b)) << '\n';
  out.flush();
  if (!out) {
    return absl::UnavailableError(
        absl::StrCat("IoFailure: write failed for ", path.string()));
  }
  return absl::OkStatus();
}

absl::StatusOr<Ledger> LoadSnapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::UnavailableError(
        absl::StrCat("IoFailure: cannot open ", path.string()));
  }
  Ledger ledger;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto bytes = FromHex(line);
    if (!bytes.ok()) {
      return absl::DataLossError(
          absl::StrCat("line ", lineno, ": ", bytes.status().message()));
    }
    auto block = DecodeBlock(*bytes);
    if (!block.ok()) {
      return absl::DataLossError(
          absl::StrCat("line ", lineno, ": ", block.status().message()));
    }
    if (auto appended = ledger.Append(*std::move(block)); !appended.ok()) {
      return appended.status();
    }
  }
  return ledger;
}

}  // namespace dpledger::ledger
