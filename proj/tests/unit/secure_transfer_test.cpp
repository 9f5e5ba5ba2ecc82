// Copyright 2026 The IDBE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <random>

#include "idbe/secure_transfer.hpp"
#include "oracles.hpp"

namespace idbe {
namespace {

SessionKey key_from(std::uint8_t seed) {
  Bytes k(32);
  for (std::size_t i = 0; i < k.size(); ++i) k[i] = static_cast<std::uint8_t>(seed * 31 + i);
  return SessionKey(k);
}

ErrorCode error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Io;
}

// Letter words enumerated in base 52 so large dictionaries stay cheap.
Dictionary numbered_dictionary(std::size_t n) {
  static const std::string letters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  std::vector<std::string> words;
  for (std::size_t i = 0; i < n; ++i) {
    std::string w = "qq";
    for (std::size_t v = i; v > 0; v /= 52) w += letters[v % 52];
    words.push_back(w);
  }
  return Dictionary::from_words(words);
}

TEST(Fragment, Sizes) {
  auto sizes = [](std::size_t n) {
    std::vector<std::size_t> out;
    for (const auto& c : fragment(Bytes(n, 1))) out.push_back(c.size());
    return out;
  };
  EXPECT_EQ(sizes(40000), (std::vector<std::size_t>{16384, 16384, 7232}));
  EXPECT_TRUE(sizes(0).empty());
  EXPECT_EQ(sizes(16384), (std::vector<std::size_t>{16384}));
}

TEST(Fragment, ReassemblyIndependentOfChunkSize) {
  std::mt19937_64 rng(67);
  auto data = testing::random_bytes(rng, 10000);
  for (std::size_t chunk : {1u, 7u, 1000u, 16384u}) {
    Bytes joined;
    for (const auto& c : fragment(data, chunk)) joined.insert(joined.end(), c.begin(), c.end());
    EXPECT_EQ(joined, data);
  }
}

TEST(SessionKey, MinimumLength) {
  EXPECT_EQ(error_of([] { SessionKey(Bytes(15, 1)); }), ErrorCode::InvalidArgument);
  EXPECT_NO_THROW(SessionKey(Bytes(16, 1)));
}

TEST(Record, RoundTripAndLayout) {
  auto key = key_from(1);
  auto chunk = to_bytes("hello dictionary");
  auto frame = protect(chunk, key, 5, false);
  EXPECT_EQ(frame.content_type, kContentDictionaryFragment);
  EXPECT_EQ(frame.sequence, 5u);
  EXPECT_EQ(frame.body.size(), chunk.size() + kMacLength);
  auto wire = serialize_frame(frame);
  EXPECT_EQ(wire.size(), kRecordHeaderSize + frame.body.size());
  EXPECT_EQ(get_be(wire, 6, 2), frame.body.size());
  auto parsed = parse_frames(wire);
  ASSERT_EQ(parsed.size(), 1u);
  EXPECT_EQ(parsed[0], frame);
  EXPECT_EQ(unprotect(frame, key), chunk);
}

TEST(Record, NonceSeparation) {
  auto key = key_from(2);
  auto chunk = Bytes(64, 'z');
  EXPECT_NE(protect(chunk, key, 0, false).body, protect(chunk, key, 1, false).body);
}

TEST(Record, CompressionShrinksConstantRuns) {
  auto key = key_from(3);
  Bytes chunk(16384, 'a');
  auto packed = protect(chunk, key, 0, true);
  auto plain = protect(chunk, key, 0, false);
  EXPECT_EQ(packed.content_type, kContentCompressedDictionaryFragment);
  EXPECT_LT(packed.body.size(), plain.body.size());
  EXPECT_EQ(unprotect(packed, key), chunk);
}

TEST(Record, OversizeChunkRejected) {
  EXPECT_EQ(error_of([] { protect(Bytes(16385, 1), key_from(1), 0, false); }), ErrorCode::InvalidArgument);
}

TEST(Record, TamperAndWrongKey) {
  auto key = key_from(4);
  auto frame = protect(to_bytes("some dictionary words"), key, 0, true);
  auto wire = serialize_frame(frame);
  for (std::size_t bit = 0; bit < wire.size() * 8; ++bit) {
    auto bad = wire;
    bad[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    auto code = error_of([&] {
      for (const auto& f : parse_frames(bad)) unprotect(f, key);
    });
    ASSERT_EQ(code, ErrorCode::AuthenticationFailure) << "bit " << bit;
  }
  EXPECT_EQ(error_of([&] { unprotect(frame, key_from(5)); }), ErrorCode::AuthenticationFailure);
}

TEST(Pack, SmallDictionaries) {
  auto key = key_from(6);
  for (std::size_t n : {0u, 1u, 3u, 10u}) {
    auto d = numbered_dictionary(n);
    for (bool z : {false, true}) EXPECT_EQ(unpack_dictionary(pack_dictionary(d, key, z), key), d);
  }
}

TEST(Pack, LargeDictionarySpansFrames) {
  auto key = key_from(7);
  auto d = numbered_dictionary(100000);
  auto packed = pack_dictionary(d, key, false);
  EXPECT_GT(parse_frames(packed).size(), 30u);
  EXPECT_EQ(unpack_dictionary(packed, key), d);
  EXPECT_EQ(unpack_dictionary(pack_dictionary(d, key, true), key), d);
}

TEST(Pack, ReorderAndDropAreSequenceGaps) {
  auto key = key_from(8);
  auto d = numbered_dictionary(20000);
  auto frames = parse_frames(pack_dictionary(d, key, false));
  ASSERT_GE(frames.size(), 3u);
  auto join = [](const std::vector<RecordFrame>& fs) {
    Bytes out;
    for (const auto& f : fs) {
      auto w = serialize_frame(f);
      out.insert(out.end(), w.begin(), w.end());
    }
    return out;
  };
  auto swapped = frames;
  std::swap(swapped[0], swapped[1]);
  EXPECT_EQ(error_of([&] { unpack_dictionary(join(swapped), key); }), ErrorCode::SequenceGap);
  auto dropped = frames;
  dropped.erase(dropped.begin() + 1);
  EXPECT_EQ(error_of([&] { unpack_dictionary(join(dropped), key); }), ErrorCode::SequenceGap);
  EXPECT_EQ(error_of([&] { unpack_dictionary(join(frames), key_from(9)); }), ErrorCode::AuthenticationFailure);
}

TEST(RecordProperty, RoundTrip) {
  std::mt19937_64 rng(71);
  auto vocab = testing::random_vocabulary(rng, 50);
  auto key = key_from(10);
  for (std::size_t i = 0; i < 1000; ++i) {
    auto s = testing::random_case(rng, i, vocab, 4000);
    auto seq = static_cast<std::uint32_t>(rng());
    auto frame = protect(s, key, seq, i % 2 == 0);
    auto parsed = parse_frames(serialize_frame(frame));
    ASSERT_EQ(parsed.size(), 1u);
    ASSERT_EQ(unprotect(parsed[0], key), s) << "case " << i;
  }
}

}  // namespace
}  // namespace idbe
