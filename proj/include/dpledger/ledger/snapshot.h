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

#ifndef DPLEDGER_LEDGER_SNAPSHOT_H_
#define DPLEDGER_LEDGER_SNAPSHOT_H_

#include <filesystem>
#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dpledger/ledger/ledger.h"

namespace dpledger::ledger {

// One hex-encoded canonical block per line, genesis first.
absl::Status WriteSnapshot(std::span<const Block> blocks,
                           const std::filesystem::path& path);

// Parses, verifies the hash chain and replays into a fresh Ledger.
absl::StatusOr<Ledger> LoadSnapshot(const std::filesystem::path& path);

}  // namespace dpledger::ledger

#endif  // DPLEDGER_LEDGER_SNAPSHOT_H_
