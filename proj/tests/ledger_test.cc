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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

#include <unistd.h>

#include "dpledger/ledger/codec.h"
#include "dpledger/ledger/hash.h"
#include "dpledger/ledger/ledger.h"
#include "dpledger/ledger/private_data.h"
#include "dpledger/ledger/snapshot.h"
#include "dpledger/ledger/world_state.h"
#include "fixtures.h"
#include "gtest/gtest.h"

namespace dpledger::ledger {
namespace {

using ::dpledger::testing::RandomRecords;
using ::dpledger::testing::Rec;
using ::dpledger::testing::ValidBlock;
using ::dpledger::testing::WriteTx;

const RecordRules kRules;

TEST(HashTest, KnownVectors) {
  EXPECT_EQ(ToHex(Sha256(std::string_view(""))),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(ToHex(Sha256(std::string_view("abc"))),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(HashTest, HexRoundTrip) {
  const Digest d = Sha256(std::string_view("round trip"));
  auto back = FromHex(ToHex(d));
  ASSERT_TRUE(back.ok());
  EXPECT_TRUE(std::equal(d.begin(), d.end(), back->begin(), back->end()));
  EXPECT_FALSE(FromHex("abc").ok());
  EXPECT_FALSE(FromHex("zz").ok());
}

TEST(HashTest, KeyedDigestDependsOnKey) {
  const Bytes msg{1, 2, 3};
  EXPECT_NE(KeyedDigest("peer-key:a", msg), KeyedDigest("peer-key:b", msg));
  EXPECT_EQ(KeyedDigest("peer-key:a", msg), KeyedDigest("peer-key:a", msg));
}

TEST(CodecTest, LengthPrefixedFields) {
  Encoder enc;
  enc.PutString("ab");
  enc.PutU64(0x0102030405060708ULL);
  const Bytes expected{0, 0, 0, 2, 'a', 'b', 0, 0, 0, 8,
                       1, 2, 3, 4, 5, 6, 7, 8};
  EXPECT_EQ(enc.bytes(), expected);
}

TEST(CodecTest, DoubleIsBitPattern) {
  Encoder enc;
  enc.PutF64(1.0);
  const Bytes expected{0, 0, 0, 8, 0x3f, 0xf0, 0, 0, 0, 0, 0, 0};
  EXPECT_EQ(enc.bytes(), expected);
}

TEST(CodecTest, TransactionRoundTrip) {
  Transaction w = WriteTx(Rec("a1", "Bob", 50));
  w.endorsements.push_back({"peer0.org1", "Org1MSP", Sha256(std::string_view("p")),
                            Sha256(std::string_view("s"))});
  auto back = DecodeTransaction(EncodeTransaction(w));
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(*back, w);

  Transaction q;
  q.tx_id = "q1";
  q.type = TxType::kQuery;
  QueryLogEntry entry;
  entry.spec.queries = {{Aggregate::kSum, "Bob"}, {Aggregate::kSum, "Ali"}};
  entry.spec.requested_epsilon = 0.25;
  entry.response = {{5100.5, -3.25}, 0.25};
  entry.response_time = 1234;
  q.payload = entry;
  back = DecodeTransaction(EncodeTransaction(q));
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(*back, q);
}

TEST(CodecTest, BlockRoundTripAndTruncation) {
  Block b = ValidBlock(1, Sha256(std::string_view("g")),
                       {WriteTx(Rec("a", "Bob", 1)), WriteTx(Rec("b", "Ali", 2))});
  b.validity[1] = false;
  const Bytes bytes = EncodeBlock(b);
  auto back = DecodeBlock(bytes);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(*back, b);
  const Bytes cut(bytes.begin(), bytes.end() - 3);
  EXPECT_FALSE(DecodeBlock(cut).ok());
}

TEST(WorldStateTest, PutReadsBackIdentically) {
  WorldState s;
  const PurchaseRecord r{"a1", "widget", "Bob", 50, "red"};
  auto key = s.Put(kRules, r);
  ASSERT_TRUE(key.ok());
  EXPECT_EQ(*key, "a1");
  ASSERT_NE(s.Find("a1"), nullptr);
  EXPECT_EQ(*s.Find("a1"), r);
  EXPECT_EQ(s.Version("a1"), 1u);
}

TEST(WorldStateTest, QuantityBounds) {
  WorldState s;
  auto zero = s.Put(kRules, Rec("z", "Bob", 0));
  EXPECT_EQ(zero.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_NE(zero.status().message().find("InvalidRecord"),
            absl::string_view::npos);
  EXPECT_TRUE(s.Put(kRules, Rec("max", "Bob", 100)).ok());
  EXPECT_FALSE(s.Put(kRules, Rec("over", "Bob", 101)).ok());
  EXPECT_TRUE(s.Put(kRules, Rec("min", "Bob", 1)).ok());
}

TEST(WorldStateTest, RejectsUnknownOwnerColorAndEmptyKey) {
  WorldState s;
  EXPECT_FALSE(s.Put(kRules, Rec("a", "Mallory", 5)).ok());
  EXPECT_FALSE(s.Put(kRules, Rec("a", "Bob", 5, "mauve")).ok());
  EXPECT_FALSE(s.Put(kRules, Rec("", "Bob", 5)).ok());
  EXPECT_EQ(s.size(), 0u);
}

TEST(WorldStateTest, SumByOwner) {
  WorldState s;
  ASSERT_TRUE(s.Put(kRules, Rec("a", "Bob", 10)).ok());
  ASSERT_TRUE(s.Put(kRules, Rec("b", "Bob", 20)).ok());
  ASSERT_TRUE(s.Put(kRules, Rec("c", "Bob", 30)).ok());
  ASSERT_TRUE(s.Put(kRules, Rec("d", "Ali", 100)).ok());
  EXPECT_EQ(s.SumQuantityByOwner("Bob"), 60);
  EXPECT_EQ(s.SumQuantityByOwner("Nobody"), 0);
  EXPECT_EQ(s.SumQuantityByOwner("Ali"), 100);
  EXPECT_EQ(s.SumQuantityByOwner(kAllOwners), 160);
}

TEST(WorldStateTest, OverwriteBumpsVersion) {
  WorldState s;
  ASSERT_TRUE(s.Put(kRules, Rec("a", "Bob", 10)).ok());
  ASSERT_TRUE(s.Put(kRules, Rec("a", "Bob", 15)).ok());
  EXPECT_EQ(s.Version("a"), 2u);
  EXPECT_EQ(s.SumQuantityByOwner("Bob"), 15);
  EXPECT_EQ(s.Version("missing"), 0u);
}

// Property: sum query equals an independent scan for random fixtures.
TEST(WorldStateTest, SumMatchesLinearScan) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto records = RandomRecords(1 + seed * 24, seed);
    WorldState s;
    std::map<std::string, std::int64_t> oracle;
    for (const auto& r : records) {
      ASSERT_TRUE(s.Put(kRules, r).ok());
      oracle[r.owner] += r.quantity;
    }
    for (const auto& owner : kRules.customers) {
      EXPECT_EQ(s.SumQuantityByOwner(owner), oracle[owner]) << seed;
    }
  }
}

TEST(BlockHashTest, DeterministicAndAvalanche) {
  const Block b = ValidBlock(1, kZeroDigest,
                             {WriteTx(Rec("a", "Bob", 10)),
                              WriteTx(Rec("b", "Claire", 20))});
  EXPECT_EQ(HashBlock(b), HashBlock(b));

  const Bytes body = EncodeBlockBody(b);
  const Digest base = Sha256(body);
  // Every single-byte flip in the hashed body changes the digest.
  for (std::size_t i = 0; i < body.size(); ++i) {
    Bytes flipped = body;
    flipped[i] ^= 0x01;
    ASSERT_NE(Sha256(flipped), base) << "byte " << i;
  }

  Block tampered = b;
  std::get<PurchaseRecord>(tampered.txs[0].payload).quantity = 11;
  EXPECT_NE(HashBlock(tampered), HashBlock(b));
}

TEST(BlockHashTest, ValidityFlagsNotHashed) {
  Block b = ValidBlock(1, kZeroDigest, {WriteTx(Rec("a", "Bob", 10))});
  Block c = b;
  c.validity[0] = false;
  EXPECT_EQ(HashBlock(b), HashBlock(c));
}

TEST(LedgerTest, GenesisThenBlockOne) {
  Ledger l;
  ASSERT_TRUE(l.Append(MakeGenesis()).ok());
  const Block genesis = l.blocks().front();
  EXPECT_EQ(genesis.prev_hash, kZeroDigest);
  auto h = l.Append(ValidBlock(1, l.tip_hash(), {WriteTx(Rec("a", "Bob", 7))}));
  ASSERT_TRUE(h.ok());
  EXPECT_EQ(*h, 2u);
  EXPECT_EQ(l.height(), 2u);
  EXPECT_EQ(l.state().SumQuantityByOwner("Bob"), 7);
  EXPECT_TRUE(l.Verify().ok());
}

TEST(LedgerTest, StalePrevHashIsChainMismatch) {
  Ledger l;
  ASSERT_TRUE(l.Append(MakeGenesis()).ok());
  ASSERT_TRUE(l.Append(ValidBlock(1, l.tip_hash(), {})).ok());
  auto r = l.Append(ValidBlock(2, l.blocks()[0].block_hash, {}));
  EXPECT_EQ(r.status().code(), absl::StatusCode::kFailedPrecondition);
  EXPECT_NE(r.status().message().find("ChainMismatch"),
            absl::string_view::npos);
  EXPECT_EQ(l.height(), 2u);
}

TEST(LedgerTest, WrongNumberOrForgedHashRejected) {
  Ledger l;
  ASSERT_TRUE(l.Append(MakeGenesis()).ok());
  EXPECT_FALSE(l.Append(ValidBlock(5, l.tip_hash(), {})).ok());
  Block forged = ValidBlock(1, l.tip_hash(), {WriteTx(Rec("a", "Bob", 1))});
  std::get<PurchaseRecord>(forged.txs[0].payload).quantity = 99;
  EXPECT_FALSE(l.Append(forged).ok());
}

TEST(LedgerTest, InvalidAndQueryTxsDoNotTouchState) {
  Ledger l;
  ASSERT_TRUE(l.Append(MakeGenesis()).ok());
  Transaction q;
  q.tx_id = "q";
  q.type = TxType::kQuery;
  q.payload = QueryLogEntry{};
  Block b = ValidBlock(1, l.tip_hash(),
                       {WriteTx(Rec("a", "Bob", 5)), WriteTx(Rec("b", "Bob", 6)),
                        q});
  b.validity[1] = false;
  ASSERT_TRUE(l.Append(b).ok());
  EXPECT_EQ(l.state().size(), 1u);
  EXPECT_EQ(l.state().SumQuantityByOwner("Bob"), 5);
}

Ledger BuildChain(std::uint64_t seed, std::size_t records, std::size_t per) {
  Ledger l;
  EXPECT_TRUE(l.Append(MakeGenesis()).ok());
  const auto rs = RandomRecords(records, seed);
  std::vector<Transaction> batch;
  for (const auto& r : rs) {
    batch.push_back(WriteTx(r));
    if (batch.size() == per) {
      EXPECT_TRUE(l.Append(ValidBlock(l.height(), l.tip_hash(), batch)).ok());
      batch.clear();
    }
  }
  if (!batch.empty()) {
    EXPECT_TRUE(l.Append(ValidBlock(l.height(), l.tip_hash(), batch)).ok());
  }
  return l;
}

// Property: replaying any chain reproduces the live state byte for byte.
TEST(LedgerTest, ReplayMatchesLiveState) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Ledger l = BuildChain(seed, 50 * seed, 1 + seed % 7);
    EXPECT_TRUE(VerifyChain(l.blocks()).ok());
    EXPECT_EQ(Replay(l.blocks()).Serialize(), l.state().Serialize());
  }
}

TEST(LedgerTest, VerifyDetectsBrokenLink) {
  const Ledger l = BuildChain(3, 40, 10);
  std::vector<Block> blocks = l.blocks();
  std::get<PurchaseRecord>(blocks[2].txs[0].payload).quantity ^= 1;
  EXPECT_FALSE(VerifyChain(blocks).ok());
  blocks = l.blocks();
  blocks[3].block_hash = HashBlock(blocks[3]);
  blocks[3].prev_hash[0] ^= 1;
  EXPECT_FALSE(VerifyChain(blocks).ok());
}

TEST(PrivateDataTest, MemberAndNonMemberReads) {
  PrivateDataCollection c({"peer0.org1"});
  const PurchaseRecord r = Rec("a1", "Bob", 50);
  c.Put(r);
  auto member = c.Read("peer0.org1", "a1");
  ASSERT_TRUE(member.ok());
  EXPECT_EQ(std::get<PurchaseRecord>(*member), r);
  auto outsider = c.Read("peer0.org9", "a1");
  ASSERT_TRUE(outsider.ok());
  EXPECT_EQ(std::get<Digest>(*outsider), Sha256(EncodeRecord(r)));
  auto absent = c.Read("peer0.org1", "nope");
  EXPECT_EQ(absent.status().code(), absl::StatusCode::kNotFound);
  EXPECT_NE(absent.status().message().find("KeyAbsent"),
            absl::string_view::npos);
}

TEST(PrivateDataTest, TamperingIsDetectable) {
  PrivateDataCollection c({"peer0.org1"});
  const PurchaseRecord r = Rec("a1", "Bob", 50);
  c.Put(r);
  EXPECT_TRUE(c.DigestsConsistent());
  const Digest stored = std::get<Digest>(*c.Read("outsider", "a1"));
  PurchaseRecord tampered = r;
  tampered.quantity = 51;
  EXPECT_NE(RecordDigest(tampered), stored);
  EXPECT_EQ(RecordDigest(r), stored);
}

TEST(SnapshotTest, RoundTripThroughFile) {
  const Ledger l = BuildChain(9, 35, 10);
  const auto path = std::filesystem::temp_directory_path() /
                    ("dpledger_snapshot_" + std::to_string(::getpid()));
  ASSERT_TRUE(WriteSnapshot(l.blocks(), path).ok());
  std::ifstream in(path);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, l.height());
  auto loaded = LoadSnapshot(path);
  ASSERT_TRUE(loaded.ok()) << loaded.status();
  EXPECT_EQ(loaded->SerializeChain(), l.SerializeChain());
  EXPECT_EQ(loaded->state(), l.state());
  std::filesystem::remove(path);
}

TEST(SnapshotTest, MissingFileIsIoFailure) {
  auto r = LoadSnapshot("/nonexistent/dir/ledger.snapshot");
  EXPECT_EQ(r.status().code(), absl::StatusCode::kUnavailable);
  EXPECT_FALSE(WriteSnapshot({}, "/nonexistent/dir/x").ok());
}

}  // namespace
}  // namespace dpledger::ledger
