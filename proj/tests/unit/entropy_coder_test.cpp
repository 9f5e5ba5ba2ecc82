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

#include "idbe/entropy_coder.hpp"
#include "oracles.hpp"

namespace idbe {
namespace {

testing::ByteVec skewed_source(std::mt19937_64& rng, std::size_t n, std::size_t alphabet) {
  std::geometric_distribution<int> d(0.35);
  testing::ByteVec out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(d(rng) % static_cast<int>(alphabet));
  return out;
}

TEST(Ari, Examples) {
  EXPECT_EQ(ari_encode(Bytes{}), Bytes(8, 0));
  EXPECT_EQ(ari_decode(Bytes(8, 0)), Bytes{});
  EXPECT_LE(ari_encode(Bytes(1000, 'a')).size(), 30u);
  EXPECT_EQ(ari_decode(ari_encode(to_bytes("banana"))), to_bytes("banana"));
  std::mt19937_64 rng(43);
  auto noise = testing::random_bytes(rng, 4096);
  EXPECT_GE(ari_encode(noise).size(), 4000u);
  auto big = testing::random_bytes(rng, 1 << 20);
  EXPECT_EQ(ari_decode(ari_encode(big)), big);
}

TEST(Ari, HeaderIsBigEndianLength) {
  auto c = ari_encode(Bytes(0x0102, 'x'));
  EXPECT_EQ(Bytes(c.begin(), c.begin() + 8), (Bytes{0, 0, 0, 0, 0, 0, 1, 2}));
}

TEST(Ari, RejectsTruncationAndTrailingBytes) {
  auto expect_corrupt = [](const Bytes& b) {
    try {
      ari_decode(b);
      ADD_FAILURE() << "accepted " << b.size() << " bytes";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::CorruptStream);
    }
  };
  expect_corrupt(Bytes(7, 0));
  auto c = ari_encode(to_bytes("the quick brown fox jumps over the lazy dog"));
  expect_corrupt(Bytes(c.begin(), c.end() - 1));
  auto longer = c;
  longer.push_back(0);
  expect_corrupt(longer);
}

TEST(FrequencyModel, RescalesAboveLimit) {
  FrequencyModel m;
  EXPECT_EQ(m.total(), 256u);
  for (int i = 0; i < 4000; ++i) {
    m.update(7);
    ASSERT_LE(m.total(), FrequencyModel::kMaxTotal);
  }
  std::uint32_t sum = 0;
  for (int s = 0; s < 256; ++s) {
    ASSERT_GE(m.count(static_cast<std::uint8_t>(s)), 1u);
    sum += m.count(static_cast<std::uint8_t>(s));
  }
  EXPECT_EQ(sum, m.total());
  std::uint32_t cum = 0;
  EXPECT_EQ(m.find(m.cumulative(7), cum), 7);
  EXPECT_EQ(cum, m.cumulative(7));
}

TEST(AriProperty, RoundTripAndDeterminism) {
  std::mt19937_64 rng(47);
  auto vocab = testing::random_vocabulary(rng, 50);
  for (std::size_t i = 0; i < 1000; ++i) {
    auto s = testing::random_case(rng, i, vocab);
    auto c = ari_encode(s);
    ASSERT_EQ(c, ari_encode(s));
    ASSERT_EQ(ari_decode(c), s) << "case " << i;
  }
}

TEST(AriProperty, EntropyBound) {
  std::mt19937_64 rng(53);
  for (std::size_t alphabet : {2u, 5u, 16u, 256u}) {
    for (std::size_t n : {1000u, 20000u}) {
      auto s = skewed_source(rng, n, alphabet);
      double bound = static_cast<double>(n) * testing::empirical_entropy(s) / 8.0 +
                     0.05 * static_cast<double>(n) + 64.0;
      EXPECT_LE(static_cast<double>(ari_encode(s).size()), bound)
          << "alphabet " << alphabet << " n " << n;
    }
  }
}

}  // namespace
}  // namespace idbe
