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

#ifndef DPLEDGER_LEDGER_CODEC_H_
#define DPLEDGER_LEDGER_CODEC_H_

// Canonical serialization shared by hashing, endorsement digests and the
// snapshot file.
//
// Every field is written as a 4-byte big-endian length followed by that many
// bytes. Integers are 8-byte big-endian, doubles are their IEEE-754 bit
// pattern as an 8-byte big-endian integer, strings are raw bytes. Lists are a
// count field followed by one nested field per element. Optionals are a
// one-byte presence field followed by the value when present. Structs write
// their fields in declaration order.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "dpledger/types.h"

namespace dpledger::ledger {

using Bytes = std::vector<std::uint8_t>;

class Encoder {
 public:
  void PutBytes(std::span<const std::uint8_t> bytes);
  void PutString(std::string_view s);
  void PutU64(std::uint64_t v);
  void PutI64(std::int64_t v) { PutU64(static_cast<std::uint64_t>(v)); }
  void PutF64(double v);
  void PutBool(bool v);
  void PutDigest(const Digest& d) { PutBytes(d); }

  const Bytes& bytes() const { return bytes_; }
  Bytes Take() { return std::move(bytes_); }

 private:
  Bytes bytes_;
};

class Decoder {
 public:
  explicit Decoder(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  absl::StatusOr<std::span<const std::uint8_t>> Field();
  absl::StatusOr<std::string> String();
  absl::StatusOr<std::uint64_t> U64();
  absl::StatusOr<std::int64_t> I64();
  absl::StatusOr<double> F64();
  absl::StatusOr<bool> Bool();
  absl::StatusOr<Digest> DigestField();

  bool done() const { return pos_ == bytes_.size(); }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

Bytes EncodeRecord(const PurchaseRecord& record);
Bytes EncodeQuerySpec(const QuerySpec& spec);
Bytes EncodeResponse(const PerturbedResponse& response);
Bytes EncodeQueryLog(const QueryLogEntry& entry);
Bytes EncodeWriteSet(const std::vector<WriteEntry>& write_set);
Bytes EncodeTransaction(const Transaction& tx);
// (number, prev_hash, txs): the preimage of block_hash.
Bytes EncodeBlockBody(const Block& block);
// All block fields including validity flags and block_hash.
Bytes EncodeBlock(const Block& block);

absl::StatusOr<PurchaseRecord> DecodeRecord(std::span<const std::uint8_t> b);
absl::StatusOr<QuerySpec> DecodeQuerySpec(std::span<const std::uint8_t> b);
absl::StatusOr<PerturbedResponse> DecodeResponse(
    std::span<const std::uint8_t> b);
absl::StatusOr<QueryLogEntry> DecodeQueryLog(std::span<const std::uint8_t> b);
absl::StatusOr<Transaction> DecodeTransaction(std::span<const std::uint8_t> b);
absl::StatusOr<Block> DecodeBlock(std::span<const std::uint8_t> b);

}  // namespace dpledger::ledger

#endif  // DPLEDGER_LEDGER_CODEC_H_
