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

#include "idbe/pipeline.hpp"
#include "oracles.hpp"

namespace idbe {
namespace {

PipelineConfig config(Transform t, DictionarySource src, std::uint32_t block = kDefaultBlockSize) {
  PipelineConfig c;
  c.transform = t;
  c.block_size = block;
  c.dictionary_source = src;
  return c;
}

Error error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error thrown";
  return Error(ErrorCode::Io, "");
}

TEST(Container, EmptyInput) {
  auto c = compress(Bytes{}, config(Transform::None, DictionarySource::NotNeeded), nullptr);
  Bytes expected = {'B', 'W', 'T', '1', 1, 0, 0x00, 0x0E, 0x10, 0x00, 2, 0, 0, 0, 0};
  EXPECT_EQ(c, expected);
  EXPECT_EQ(decompress(c, nullptr), Bytes{});
}

TEST(Container, BananaSingleBlock) {
  auto c = compress(as_bytes("banana"), config(Transform::None, DictionarySource::NotNeeded), nullptr);
  ASSERT_GT(c.size(), 27u);
  EXPECT_EQ(get_be(c, 11, 4), 1u);
  EXPECT_EQ(get_be(c, 15, 4), 6u);
  EXPECT_EQ(get_be(c, 19, 4), 3u);
  auto payload_len = get_be(c, 23, 4);
  ASSERT_EQ(c.size(), 27 + payload_len);
  EXPECT_EQ(to_string(decode_payload(ByteView(c).subspan(27))), "nnbaaa");
  EXPECT_EQ(to_string(decompress(c, nullptr)), "banana");
}

TEST(Container, HeaderFields) {
  auto d = Dictionary::from_words({"the", "and"});
  auto c = compress(as_bytes("the and the"), config(Transform::Idbe, DictionarySource::Embedded, 4096), &d);
  std::size_t consumed = 0;
  auto h = read_container_header(c, &consumed);
  EXPECT_EQ(h.transform, Transform::Idbe);
  EXPECT_EQ(h.block_size, 4096u);
  EXPECT_EQ(h.dictionary_source, DictionarySource::Embedded);
  ASSERT_TRUE(h.embedded_dictionary.has_value());
  EXPECT_EQ(*h.embedded_dictionary, d);
  EXPECT_EQ(h.block_count, 1u);
  EXPECT_EQ(get_be(c, 11, 4), serialize_dictionary(d).size());
  EXPECT_EQ(to_string(decompress(c, nullptr)), "the and the");
}

TEST(Container, ExternalDictionaryMissing) {
  auto d = Dictionary::from_words({"the"});
  auto c = compress(as_bytes("the cat"), config(Transform::Idbe, DictionarySource::External), &d);
  EXPECT_EQ(c[10], 0);
  EXPECT_EQ(error_of([&] { decompress(c, nullptr); }).code(), ErrorCode::DictionaryMissing);
  EXPECT_EQ(to_string(decompress(c, &d)), "the cat");
}

TEST(Container, TruncationNamesTheBlock) {
  std::mt19937_64 rng(59);
  auto vocab = testing::random_vocabulary(rng, 100);
  auto text = testing::random_text(rng, 5000, vocab);
  auto c = compress(text, config(Transform::None, DictionarySource::NotNeeded, 1024), nullptr);
  ASSERT_EQ(get_be(c, 11, 4), 5u);
  auto e = error_of([&] { decompress(ByteView(c).first(c.size() - 10), nullptr); });
  EXPECT_EQ(e.code(), ErrorCode::CorruptStream);
  EXPECT_NE(std::string(e.what()).find("block 4"), std::string::npos) << e.what();
  EXPECT_EQ(error_of([&] { decompress(ByteView(c).first(9), nullptr); }).code(),
            ErrorCode::MalformedHeader);
  auto extra = c;
  extra.push_back(0);
  EXPECT_EQ(error_of([&] { decompress(extra, nullptr); }).code(), ErrorCode::CorruptStream);
}

TEST(Container, HeaderErrors) {
  auto c = compress(as_bytes("banana"), config(Transform::None, DictionarySource::NotNeeded), nullptr);
  auto bad_magic = c;
  bad_magic[0] = 'X';
  EXPECT_EQ(error_of([&] { decompress(bad_magic, nullptr); }).code(), ErrorCode::MalformedHeader);
  auto bad_version = c;
  bad_version[4] = 2;
  EXPECT_EQ(error_of([&] { decompress(bad_version, nullptr); }).code(), ErrorCode::UnsupportedVersion);
  auto bad_primary = c;
  bad_primary[22] = 9;
  EXPECT_EQ(error_of([&] { decompress(bad_primary, nullptr); }).code(), ErrorCode::CorruptStream);
}

TEST(Container, ConfigValidation) {
  EXPECT_EQ(error_of([] { config(Transform::None, DictionarySource::NotNeeded, 1000).validate(); }).code(),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(error_of([] { config(Transform::None, DictionarySource::NotNeeded, kMaxBlockSize + 1).validate(); })
                .code(),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(error_of([] { compress(as_bytes("x"), config(Transform::Idbe, DictionarySource::External), nullptr); })
                .code(),
            ErrorCode::DictionaryMissing);
}

TEST(Bpc, Arithmetic) {
  EXPECT_DOUBLE_EQ(bpc(1000, 250), 2.0);
  EXPECT_DOUBLE_EQ(bpc(777, 777), 8.0);
  EXPECT_EQ(error_of([] { bpc(0, 1); }).code(), ErrorCode::InvalidArgument);
}

TEST(Transforms, NamesRoundTrip) {
  for (auto t : {Transform::None, Transform::Star, Transform::Idbe})
    EXPECT_EQ(parse_transform(transform_name(t)), t);
  EXPECT_FALSE(parse_transform("zip").has_value());
}

TEST(PipelineProperty, RoundTripAllTransforms) {
  std::mt19937_64 rng(61);
  for (std::size_t i = 0; i < 1000; ++i) {
    auto vocab = testing::random_vocabulary(rng, 1 + rng() % 100);
    auto dict = Dictionary::from_words(std::vector<std::string>(vocab.begin(), vocab.begin() + (vocab.size() + 1) / 2));
    auto s = testing::random_case(rng, i, vocab, 3000);
    auto t = static_cast<Transform>(i % 3);
    auto src = static_cast<DictionarySource>(i % 2);
    auto cfg = config(t, t == Transform::None ? DictionarySource::NotNeeded : src, 1024);
    auto c = compress(s, cfg, &dict);
    ASSERT_EQ(c, compress(s, cfg, &dict));
    ASSERT_EQ(decompress(c, &dict), s) << "case " << i;
  }
}

}  // namespace
}  // namespace idbe
