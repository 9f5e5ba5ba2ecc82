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
#include <set>

#include "idbe/dictionary.hpp"
#include "oracles.hpp"

namespace idbe {
namespace {

Bytes code(std::uint64_t rank) {
  auto c = code_for_rank(rank);
  return Bytes(c.bytes().begin(), c.bytes().end());
}

RankedLexicon lexicon_of(std::initializer_list<std::string_view> texts) {
  std::vector<ByteView> views;
  for (auto t : texts) views.push_back(as_bytes(t));
  return build_lexicon(views);
}

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Io;
}

TEST(Lexicon, RanksByFrequencyThenBytes) {
  EXPECT_EQ(lexicon_of({"aa bb bb cc cc cc"}),
            (RankedLexicon{{"cc", 3}, {"bb", 2}, {"aa", 1}}));
  EXPECT_EQ(lexicon_of({"xx xx yy yy"}), (RankedLexicon{{"xx", 2}, {"yy", 2}}));
  EXPECT_TRUE(lexicon_of({""}).empty());
}

TEST(Lexicon, CountsAcrossInputsAndSkipsShortWords) {
  auto lex = lexicon_of({"a The the", "the I x, The"});
  EXPECT_EQ(lex, (RankedLexicon{{"The", 2}, {"the", 2}}));
}

TEST(CodeForRank, KnownValues) {
  EXPECT_EQ(code(0), Bytes{33});
  EXPECT_EQ(code(217), Bytes{250});
  EXPECT_EQ(code(218), (Bytes{33, 33}));
  EXPECT_EQ(code(219), (Bytes{33, 34}));
  EXPECT_EQ(code(47742), (Bytes{33, 33, 33}));
  EXPECT_EQ(code(kDictionaryCapacity - 1), (Bytes{250, 250, 250, 250}));
  EXPECT_EQ(error_of([] { code_for_rank(kDictionaryCapacity); }), ErrorCode::DictionaryOverflow);
}

TEST(CodeForRank, MatchesCountingOracle) {
  const std::size_t n = 100000;
  auto expected = testing::enumerate_codewords(n);
  ASSERT_EQ(expected.size(), n);
  std::set<Bytes> seen;
  std::size_t prev_len = 1;
  for (std::size_t r = 0; r < n; ++r) {
    auto c = code(r);
    ASSERT_EQ(c, expected[r]) << "rank " << r;
    ASSERT_GE(c.size(), prev_len);
    prev_len = c.size();
    ASSERT_TRUE(seen.insert(c).second);
    ASSERT_EQ(rank_for_code(c), r);
  }
}

TEST(CodeForRank, BandBoundaries) {
  const std::uint64_t n = 218;
  const std::uint64_t edges[] = {n, n + n * n, n + n * n + n * n * n};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(code_for_rank(edges[i] - 1).length, i + 1);
    EXPECT_EQ(code_for_rank(edges[i]).length, i + 2);
    EXPECT_EQ(code(edges[i]), Bytes(i + 2, 33));
  }
}

TEST(CodeForRank, RejectsMalformedCodes) {
  EXPECT_FALSE(rank_for_code(Bytes{}).has_value());
  EXPECT_FALSE(rank_for_code(Bytes{32}).has_value());
  EXPECT_FALSE(rank_for_code(Bytes{33, 251}).has_value());
  EXPECT_FALSE(rank_for_code(Bytes{33, 33, 33, 33, 33}).has_value());
}

TEST(Dictionary, AssignsCodesByRank) {
  auto d = build_dictionary(RankedLexicon{{"cc", 3}, {"bb", 2}, {"aa", 1}});
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(*d.find("cc"), code_for_rank(0));
  EXPECT_EQ(*d.find("bb"), code_for_rank(1));
  EXPECT_EQ(*d.find("aa"), code_for_rank(2));
  EXPECT_EQ(d.find("dd"), nullptr);
  EXPECT_EQ(d.lookup(Bytes{35}), "aa");
  EXPECT_FALSE(d.lookup(Bytes{36}).has_value());
  EXPECT_TRUE(build_dictionary({}).empty());
}

TEST(Dictionary, BandBoundaryEntry) {
  std::mt19937_64 rng(3);
  auto words = testing::random_vocabulary(rng, 219);
  auto d = Dictionary::from_words(words);
  EXPECT_EQ(Bytes(d.find(words[218])->bytes().begin(), d.find(words[218])->bytes().end()),
            (Bytes{33, 33}));
  EXPECT_EQ(d.find(words[217])->length, 1);
}

TEST(Dictionary, RejectsBadWords) {
  EXPECT_EQ(error_of([] { Dictionary::from_words({"ab", "ab"}); }), ErrorCode::DuplicateWord);
  EXPECT_EQ(error_of([] { Dictionary::from_words({"a1"}); }), ErrorCode::IllegalWordByte);
  EXPECT_EQ(error_of([] { Dictionary::from_words({"a"}); }), ErrorCode::IllegalWordByte);
  EXPECT_EQ(error_of([] { Dictionary::from_words({""}); }), ErrorCode::IllegalWordByte);
}

TEST(DictionaryFormat, SerializeExample) {
  auto d = Dictionary::from_words({"cc", "bb", "aa"});
  EXPECT_EQ(to_string(serialize_dictionary(d)), "IDBEDICT 1\n3\ncc\nbb\naa\n");
  EXPECT_EQ(parse_dictionary(serialize_dictionary(d)), d);
  EXPECT_EQ(to_string(serialize_dictionary(Dictionary{})), "IDBEDICT 1\n0\n");
}

TEST(DictionaryFormat, ParseErrors) {
  auto parse = [](std::string_view s) { return parse_dictionary(as_bytes(s)); };
  EXPECT_EQ(error_of([&] { parse("IDBEDICT 2\n0\n"); }), ErrorCode::UnsupportedVersion);
  EXPECT_EQ(error_of([&] { parse("NOTADICT\n0\n"); }), ErrorCode::MalformedHeader);
  EXPECT_EQ(error_of([&] { parse("IDBEDICT 1\nx\n"); }), ErrorCode::MalformedHeader);
  EXPECT_EQ(error_of([&] { parse("IDBEDICT 1\n2\nab\n"); }), ErrorCode::MalformedHeader);
  EXPECT_EQ(error_of([&] { parse("IDBEDICT 1\n1\nab\nextra"); }), ErrorCode::MalformedHeader);
  EXPECT_EQ(error_of([&] { parse("IDBEDICT 1\n2\nab\nab\n"); }), ErrorCode::DuplicateWord);
  EXPECT_EQ(error_of([&] { parse("IDBEDICT 1\n1\na-b\n"); }), ErrorCode::IllegalWordByte);
  EXPECT_EQ(error_of([&] { parse("IDBEDICT 1\n99999999999\n"); }), ErrorCode::DictionaryOverflow);
  EXPECT_EQ(error_of([&] { parse("IDBEDICT 1\n9999\nab\n"); }), ErrorCode::MalformedHeader);
}

TEST(DictionaryFormatProperty, RoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto d = Dictionary::from_words(testing::random_vocabulary(rng, rng() % 300));
    ASSERT_EQ(parse_dictionary(serialize_dictionary(d)), d);
  }
}

}  // namespace
}  // namespace idbe
