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

#include "dpledger/ledger/codec.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <utility>

#include "absl/status/status.h"
#include "dpledger/status_macros.h"

namespace dpledger::ledger {
namespace {

void AppendBigEndian(Bytes& out, std::uint64_t v, int width) {
  for (int i = width - 1; i >= 0; --i) {
    out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
}

std::uint64_t ReadBigEndian(std::span<const std::uint8_t> b) {
  std::uint64_t v = 0;
  for (std::uint8_t byte : b) v = (v << 8) | byte;
  return v;
}

absl::Status Trailing(const Decoder& dec, const char* what) {
  if (!dec.done()) {
    return absl::DataLossError(std::string("trailing bytes after ") + what);
  }
  return absl::OkStatus();
}

void EncodeTxInto(Encoder& enc, const Transaction& tx) {
  enc.PutString(tx.tx_id);
  enc.PutU64(static_cast<std::uint64_t>(tx.type));
  if (const auto* record = std::get_if<PurchaseRecord>(&tx.payload)) {
    enc.PutU64(0);
    enc.PutBytes(EncodeRecord(*record));
  } else {
    enc.PutU64(1);
    enc.PutBytes(EncodeQueryLog(std::get<QueryLogEntry>(tx.payload)));
  }
  enc.PutString(tx.client_id);
  enc.PutI64(tx.submit_time);
  enc.PutBytes(EncodeWriteSet(tx.write_set));
  enc.PutU64(tx.endorsements.size());
  for (const Endorsement& e : tx.endorsements) {
    Encoder sub;
    sub.PutString(e.peer_id);
    sub.PutString(e.org_id);
    sub.PutDigest(e.payload_digest);
    sub.PutDigest(e.signature);
    enc.PutBytes(sub.bytes());
  }
}

absl::StatusOr<std::vector<WriteEntry>> DecodeWriteSet(
    std::span<const std::uint8_t> b) {
  Decoder dec(b);
  std::uint64_t n;
  DPL_ASSIGN_OR_RETURN(n, dec.U64());
  std::vector<WriteEntry> out;
  for (std::uint64_t i = 0; i < n; ++i) {
    std::span<const std::uint8_t> field;
    DPL_ASSIGN_OR_RETURN(field, dec.Field());
    Decoder sub(field);
    WriteEntry entry;
    DPL_ASSIGN_OR_RETURN(entry.key, sub.String());
    DPL_ASSIGN_OR_RETURN(entry.version, sub.U64());
    DPL_RETURN_IF_ERROR(Trailing(sub, "write entry"));
    out.push_back(std::move(entry));
  }
  DPL_RETURN_IF_ERROR(Trailing(dec, "write set"));
  return out;
}

}  // namespace

void Encoder::PutBytes(std::span<const std::uint8_t> bytes) {
  AppendBigEndian(bytes_, bytes.size(), 4);
  bytes_.insert(bytes_.end(), bytes.begin(), bytes.end());
}

void Encoder::PutString(std::string_view s) {
  PutBytes(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
}

void Encoder::PutU64(std::uint64_t v) {
  AppendBigEndian(bytes_, 8, 4);
  AppendBigEndian(bytes_, v, 8);
}

void Encoder::PutF64(double v) { PutU64(std::bit_cast<std::uint64_t>(v)); }

void Encoder::PutBool(bool v) {
  AppendBigEndian(bytes_, 1, 4);
  bytes_.push_back(v ? 1 : 0);
}

absl::StatusOr<std::span<const std::uint8_t>> Decoder::Field() {
  if (bytes_.size() - pos_ < 4) {
    return absl::DataLossError("truncated field length");
  }
  std::uint64_t len = ReadBigEndian(bytes_.subspan(pos_, 4));
  pos_ += 4;
  if (bytes_.size() - pos_ < len) {
    return absl::DataLossError("truncated field body");
  }
  auto out = bytes_.subspan(pos_, len);
  pos_ += len;
  return out;
}

absl::StatusOr<std::string> Decoder::String() {
  std::span<const std::uint8_t> f;
  DPL_ASSIGN_OR_RETURN(f, Field());
  return std::string(f.begin(), f.end());
}

absl::StatusOr<std::uint64_t> Decoder::U64() {
  std::span<const std::uint8_t> f;
  DPL_ASSIGN_OR_RETURN(f, Field());
  if (f.size() != 8) return absl::DataLossError("integer field not 8 bytes");
  return ReadBigEndian(f);
}

absl::StatusOr<std::int64_t> Decoder::I64() {
  std::uint64_t v;
  DPL_ASSIGN_OR_RETURN(v, U64());
  return static_cast<std::int64_t>(v);
}

absl::StatusOr<double> Decoder::F64() {
  std::uint64_t v;
  DPL_ASSIGN_OR_RETURN(v, U64());
  return std::bit_cast<double>(v);
}

absl::StatusOr<bool> Decoder::Bool() {
  std::span<const std::uint8_t> f;
  DPL_ASSIGN_OR_RETURN(f, Field());
  if (f.size() != 1 || f[0] > 1) return absl::DataLossError("bad bool field");
  return f[0] == 1;
}

absl::StatusOr<Digest> Decoder::DigestField() {
  std::span<const std::uint8_t> f;
  DPL_ASSIGN_OR_RETURN(f, Field());
  Digest d{};
  if (f.size() != d.size()) return absl::DataLossError("bad digest length");
  std::copy(f.begin(), f.end(), d.begin());
  return d;
}

Bytes EncodeRecord(const PurchaseRecord& record) {
  Encoder enc;
  enc.PutString(record.key);
  enc.PutString(record.product);
  enc.PutString(record.owner);
  enc.PutI64(record.quantity);
  enc.PutString(record.color);
  return enc.Take();
}

Bytes EncodeQuerySpec(const QuerySpec& spec) {
  Encoder enc;
  enc.PutU64(spec.queries.size());
  for (const SumQuery& q : spec.queries) {
    Encoder sub;
    sub.PutU64(static_cast<std::uint64_t>(q.aggregate));
    sub.PutString(q.owner);
    enc.PutBytes(sub.bytes());
  }
  enc.PutBool(spec.requested_epsilon.has_value());
  if (spec.requested_epsilon) enc.PutF64(*spec.requested_epsilon);
  return enc.Take();
}

Bytes EncodeResponse(const PerturbedResponse& response) {
  Encoder enc;
  enc.PutU64(response.values.size());
  for (double v : response.values) enc.PutF64(v);
  enc.PutF64(response.epsilon_used);
  return enc.Take();
}

Bytes EncodeQueryLog(const QueryLogEntry& entry) {
  Encoder enc;
  enc.PutBytes(EncodeQuerySpec(entry.spec));
  enc.PutDigest(entry.spec_digest);
  enc.PutBytes(EncodeResponse(entry.response));
  enc.PutI64(entry.response_time);
  return enc.Take();
}

Bytes EncodeWriteSet(const std::vector<WriteEntry>& write_set) {
  Encoder enc;
  enc.PutU64(write_set.size());
  for (const WriteEntry& w : write_set) {
    Encoder sub;
    sub.PutString(w.key);
    sub.PutU64(w.version);
    enc.PutBytes(sub.bytes());
  }
  return enc.Take();
}

Bytes EncodeTransaction(const Transaction& tx) {
  Encoder enc;
  EncodeTxInto(enc, tx);
  return enc.Take();
}

Bytes EncodeBlockBody(const Block& block) {
  Encoder enc;
  enc.PutU64(block.number);
  enc.PutDigest(block.prev_hash);
  enc.PutU64(block.txs.size());
  for (const Transaction& tx : block.txs) enc.PutBytes(EncodeTransaction(tx));
  return enc.Take();
}

Bytes EncodeBlock(const Block& block) {
  Encoder enc;
  enc.PutBytes(EncodeBlockBody(block));
  enc.PutU64(block.validity.size());
  for (bool v : block.validity) enc.PutBool(v);
  enc.PutDigest(block.block_hash);
  return enc.Take();
}

absl::StatusOr<PurchaseRecord> DecodeRecord(std::span<const std::uint8_t> b) {
  Decoder dec(b);
  PurchaseRecord r;
  DPL_ASSIGN_OR_RETURN(r.key, dec.String());
  DPL_ASSIGN_OR_RETURN(r.product, dec.String());
  DPL_ASSIGN_OR_RETURN(r.owner, dec.String());
  DPL_ASSIGN_OR_RETURN(r.quantity, dec.I64());
  DPL_ASSIGN_OR_RETURN(r.color, dec.String());
  DPL_RETURN_IF_ERROR(Trailing(dec, "record"));
  return r;
}

absl::StatusOr<QuerySpec> DecodeQuerySpec(std::span<const std::uint8_t> b) {
  Decoder dec(b);
  QuerySpec spec;
  std::uint64_t n;
  DPL_ASSIGN_OR_RETURN(n, dec.U64());
  for (std::uint64_t i = 0; i < n; ++i) {
    std::span<const std::uint8_t> field;
    DPL_ASSIGN_OR_RETURN(field, dec.Field());
    Decoder sub(field);
    std::uint64_t agg;
    DPL_ASSIGN_OR_RETURN(agg, sub.U64());
    if (agg != static_cast<std::uint64_t>(Aggregate::kSum)) {
      return absl::DataLossError("unknown aggregate code");
    }
    SumQuery q;
    DPL_ASSIGN_OR_RETURN(q.owner, sub.String());
    DPL_RETURN_IF_ERROR(Trailing(sub, "query"));
    spec.queries.push_back(std::move(q));
  }
  bool has_eps;
  DPL_ASSIGN_OR_RETURN(has_eps, dec.Bool());
  if (has_eps) {
    double eps;
    DPL_ASSIGN_OR_RETURN(eps, dec.F64());
    spec.requested_epsilon = eps;
  }
  DPL_RETURN_IF_ERROR(Trailing(dec, "query spec"));
  return spec;
}

absl::StatusOr<PerturbedResponse> DecodeResponse(
    std::span<const std::uint8_t> b) {
  Decoder dec(b);
  PerturbedResponse r;
  std::uint64_t n;
  DPL_ASSIGN_OR_RETURN(n, dec.U64());
  for (std::uint64_t i = 0; i < n; ++i) {
    double v;
    DPL_ASSIGN_OR_RETURN(v, dec.F64());
    r.values.push_back(v);
  }
  DPL_ASSIGN_OR_RETURN(r.epsilon_used, dec.F64());
  DPL_RETURN_IF_ERROR(Trailing(dec, "response"));
  return r;
}

absl::StatusOr<QueryLogEntry> DecodeQueryLog(std::span<const std::uint8_t> b) {
  Decoder dec(b);
  QueryLogEntry e;
  std::span<const std::uint8_t> field;
  DPL_ASSIGN_OR_RETURN(field, dec.Field());
  DPL_ASSIGN_OR_RETURN(e.spec, DecodeQuerySpec(field));
  DPL_ASSIGN_OR_RETURN(e.spec_digest, dec.DigestField());
  DPL_ASSIGN_OR_RETURN(field, dec.Field());
  DPL_ASSIGN_OR_RETURN(e.response, DecodeResponse(field));
  DPL_ASSIGN_OR_RETURN(e.response_time, dec.I64());
  DPL_RETURN_IF_ERROR(Trailing(dec, "query log"));
  return e;
}

absl::StatusOr<Transaction> DecodeTransaction(std::span<const std::uint8_t> b) {
  Decoder dec(b);
  Transaction tx;
  DPL_ASSIGN_OR_RETURN(tx.tx_id, dec.String());
  std::uint64_t type;
  DPL_ASSIGN_OR_RETURN(type, dec.U64());
  if (type > static_cast<std::uint64_t>(TxType::kQuery)) {
    return absl::DataLossError("unknown transaction type code");
  }
  tx.type = static_cast<TxType>(type);
  std::uint64_t which;
  DPL_ASSIGN_OR_RETURN(which, dec.U64());
  std::span<const std::uint8_t> field;
  DPL_ASSIGN_OR_RETURN(field, dec.Field());
  if (which == 0) {
    PurchaseRecord r;
    DPL_ASSIGN_OR_RETURN(r, DecodeRecord(field));
    tx.payload = std::move(r);
  } else if (which == 1) {
    QueryLogEntry e;
    DPL_ASSIGN_OR_RETURN(e, DecodeQueryLog(field));
    tx.payload = std::move(e);
  } else {
    return absl::DataLossError("unknown payload variant");
  }
  DPL_ASSIGN_OR_RETURN(tx.client_id, dec.String());
  DPL_ASSIGN_OR_RETURN(tx.submit_time, dec.I64());
  DPL_ASSIGN_OR_RETURN(field, dec.Field());
  DPL_ASSIGN_OR_RETURN(tx.write_set, DecodeWriteSet(field));
  std::uint64_t n;
  DPL_ASSIGN_OR_RETURN(n, dec.U64());
  for (std::uint64_t i = 0; i < n; ++i) {
    DPL_ASSIGN_OR_RETURN(field, dec.Field());
    Decoder sub(field);
    Endorsement e;
    DPL_ASSIGN_OR_RETURN(e.peer_id, sub.String());
    DPL_ASSIGN_OR_RETURN(e.org_id, sub.String());
    DPL_ASSIGN_OR_RETURN(e.payload_digest, sub.DigestField());
    DPL_ASSIGN_OR_RETURN(e.signature, sub.DigestField());
    DPL_RETURN_IF_ERROR(Trailing(sub, "endorsement"));
    tx.endorsements.push_back(std::move(e));
  }
  DPL_RETURN_IF_ERROR(Trailing(dec, "transaction"));
  return tx;
}

absl::StatusOr<Block> DecodeBlock(std::span<const std::uint8_t> b) {
  Decoder dec(b);
  Block block;
  std::span<const std::uint8_t> body;
  DPL_ASSIGN_OR_RETURN(body, dec.Field());
  {
    Decoder bd(body);
    DPL_ASSIGN_OR_RETURN(block.number, bd.U64());
    DPL_ASSIGN_OR_RETURN(block.prev_hash, bd.DigestField());
    std::uint64_t n;
    DPL_ASSIGN_OR_RETURN(n, bd.U64());
    for (std::uint64_t i = 0; i < n; ++i) {
      std::span<const std::uint8_t> field;
      DPL_ASSIGN_OR_RETURN(field, bd.Field());
      Transaction tx;
      DPL_ASSIGN_OR_RETURN(tx, DecodeTransaction(field));
      block.txs.push_back(std::move(tx));
    }
    DPL_RETURN_IF_ERROR(Trailing(bd, "block body"));
  }
  std::uint64_t flags;
  DPL_ASSIGN_OR_RETURN(flags, dec.U64());
  for (std::uint64_t i = 0; i < flags; ++i) {
    bool v;
    DPL_ASSIGN_OR_RETURN(v, dec.Bool());
    block.validity.push_back(v);
  }
  DPL_ASSIGN_OR_RETURN(block.block_hash, dec.DigestField());
  DPL_RETURN_IF_ERROR(Trailing(dec, "block"));
  return block;
}

}  // namespace dpledger::ledger

namespace dpledger {

const char* TxTypeName(TxType type) {
  switch (type) {
    case TxType::kInit:
      return "Init";
    case TxType::kWrite:
      return "Write";
    case TxType::kQuery:
      return "Query";
  }
  return "Unknown";
}

}  // namespace dpledger
