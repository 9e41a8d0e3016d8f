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

#ifndef DPLEDGER_LEDGER_HASH_H_
#define DPLEDGER_LEDGER_HASH_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "dpledger/types.h"

namespace dpledger::ledger {

Digest Sha256(std::span<const std::uint8_t> bytes);
Digest Sha256(std::string_view bytes);

// SHA-256 over key || bytes, both length-prefixed. Used for peer-keyed
// endorsement signatures.
Digest KeyedDigest(std::string_view key, std::span<const std::uint8_t> bytes);

std::string ToHex(std::span<const std::uint8_t> bytes);
absl::StatusOr<std::vector<std::uint8_t>> FromHex(std::string_view hex);

}  // namespace dpledger::ledger

#endif  // DPLEDGER_LEDGER_HASH_H_
