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

#include "idbe/idbe_codec.hpp"
#include "idbe/tokenizer.hpp"
#include "oracles.hpp"

namespace idbe {
namespace {

const Dictionary& small_dict() {
  static const Dictionary d = Dictionary::from_words({"the", "and"});
  return d;
}

Bytes enc(std::string_view s) { return idbe_encode(as_bytes(s), small_dict()); }
std::string dec(const Bytes& b) { return to_string(idbe_decode(b, small_dict())); }

std::string decode_error(const Bytes& b) {
  try {
    idbe_decode(b, small_dict());
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CorruptStream);
    return e.what();
  }
  ADD_FAILURE() << "decode accepted a malformed stream";
  return {};
}

TEST(IdbeEncode, Examples) {
  EXPECT_EQ(enc("the and"), (Bytes{251, 33, 251, 34, 255}));
  EXPECT_EQ(enc("the and "), (Bytes{251, 33, 251, 34}));
  EXPECT_EQ(enc("the,and "), (Bytes{251, 33, 255, 44, 251, 34}));
  EXPECT_EQ(enc("zq the "), (Bytes{122, 113, 32, 251, 33}));
  EXPECT_EQ(enc("\xFF"), (Bytes{255, 255}));
  EXPECT_EQ(enc(""), Bytes{});
}

TEST(IdbeEncode, OnlySingleSpaceIsElided) {
  EXPECT_EQ(enc("the  and "), (Bytes{251, 33, 32, 251, 34}));
  EXPECT_EQ(enc("the\nand "), (Bytes{251, 33, 255, '\n', 251, 34}));
  EXPECT_EQ(enc("theand "), (Bytes{'t', 'h', 'e', 'a', 'n', 'd', ' '}));
  EXPECT_EQ(enc("The "), (Bytes{'T', 'h', 'e', ' '}));
}

TEST(IdbeDecode, Examples) {
  EXPECT_EQ(dec({251, 33, 251, 34}), "the and ");
  EXPECT_EQ(dec({251, 33, 251, 34, 255}), "the and");
  EXPECT_EQ(dec({251, 33, 255, 255, 255}), "the\xFF");
  EXPECT_EQ(dec({251, 33, 255, 255}), "the \xFF");
  EXPECT_EQ(dec({251, 251}), "\xFB");
  EXPECT_EQ(dec({251, 251, 251, 33, 255}), "\xFBthe");
  EXPECT_EQ(dec({254, 254}), "\xFE");
}

TEST(IdbeDecode, ErrorsNameTheOffset) {
  EXPECT_NE(decode_error({'x', 251, 32}).find("byte 2"), std::string::npos);
  EXPECT_NE(decode_error({'x', 'y', 252, 33}).find("byte 2"), std::string::npos);
  EXPECT_NE(decode_error({251, 40}).find("byte 0"), std::string::npos);
  EXPECT_NE(decode_error({'a', 255}).find("byte 1"), std::string::npos);
  EXPECT_NE(decode_error({251}).find("byte 0"), std::string::npos);
}

TEST(IdbeCodec, BinaryWithoutWordsOnlyDoublesReservedBytes) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    auto s = testing::random_bytes(rng, 1 + rng() % 512);
    for (std::size_t k = 1; k < s.size(); ++k)
      if (is_ascii_letter(s[k]) && is_ascii_letter(s[k - 1])) s[k] = '0';
    Bytes expected;
    for (auto b : s) {
      expected.push_back(b);
      if (b >= 251) expected.push_back(b);
    }
    ASSERT_EQ(idbe_encode(s, small_dict()), expected);
  }
}

TEST(IdbeCodecProperty, RoundTrip) {
  std::mt19937_64 rng(19);
  for (std::size_t i = 0; i < 1000; ++i) {
    auto vocab = testing::random_vocabulary(rng, 1 + rng() % 300);
    std::vector<std::string> dict_words(vocab.begin(), vocab.begin() + (vocab.size() + 1) / 2);
    auto dict = Dictionary::from_words(dict_words);
    auto s = testing::random_case(rng, i, vocab);
    auto e = idbe_encode(s, dict);
    ASSERT_EQ(idbe_decode(e, dict), s) << "case " << i;
  }
}

}  // namespace
}  // namespace idbe
