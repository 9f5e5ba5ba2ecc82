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

#include "idbe/star_codec.hpp"

#include <algorithm>
#include <map>

#include "idbe/tokenizer.hpp"

namespace idbe {

namespace {

constexpr std::string_view kLetters =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

// Walks the pattern enumeration for one word length.
class PatternEnumerator {
 public:
  explicit PatternEnumerator(std::size_t length) : length_(length) {}

  std::optional<std::string> next() {
    if (kept_ >= length_) return std::nullopt;
    std::string pattern(length_, static_cast<char>(kStar));
    for (std::size_t i = 0; i < kept_; ++i) pattern[positions_[i]] = kLetters[letters_[i]];
    advance();
    return pattern;
  }

 private:
  void advance() {
    // Letter tuple: last position varies fastest.
    for (std::size_t i = kept_; i-- > 0;) {
      if (++letters_[i] < kLetters.size()) return;
      letters_[i] = 0;
    }
    if (next_combination()) return;
    ++kept_;
    positions_.resize(kept_);
    letters_.assign(kept_, 0);
    for (std::size_t i = 0; i < kept_; ++i) positions_[i] = i;
  }

  bool next_combination() {
    for (std::size_t i = kept_; i-- > 0;) {
      if (positions_[i] < length_ - kept_ + i) {
        ++positions_[i];
        for (std::size_t j = i + 1; j < kept_; ++j) positions_[j] = positions_[j - 1] + 1;
        return true;
      }
    }
    return false;
  }

  std::size_t length_;
  std::size_t kept_ = 0;
  std::vector<std::size_t> positions_;
  std::vector<std::size_t> letters_;
};

constexpr std::uint64_t kSaturated = ~std::uint64_t{0};

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ using Wide = unsigned __int128;
  Wide r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(r);
}

[[noreturn]] void corrupt(std::size_t offset, const std::string& what) {
  throw Error(ErrorCode::CorruptStream,
              "corrupt star stream at byte " + std::to_string(offset) + ": " + what);
}

constexpr bool is_pattern_byte(std::uint8_t b) noexcept {
  return b == kStar || is_ascii_letter(b);
}

}  // namespace

std::optional<std::string> star_pattern(std::size_t length, std::uint64_t index) {
  if (length == 0) return std::nullopt;
  const std::uint64_t alphabet = kLetters.size();
  for (std::size_t kept = 0; kept < length; ++kept) {
    std::uint64_t tuples = 1;
    for (std::size_t i = 0; i < kept; ++i) tuples = saturating_mul(tuples, alphabet);
    std::uint64_t block = saturating_mul(binomial(length, kept), tuples);
    if (index >= block) {
      index -= block;
      continue;
    }
    std::uint64_t combo = index / tuples;
    std::uint64_t letters = index % tuples;
    std::string pattern(length, static_cast<char>(kStar));
    std::vector<std::size_t> positions;
    std::size_t p = 0;
    for (std::size_t slot = 0; slot < kept; ++slot) {
      for (;; ++p) {
        std::uint64_t rest = binomial(length - p - 1, kept - slot - 1);
        if (combo < rest) break;
        combo -= rest;
      }
      positions.push_back(p++);
    }
    for (std::size_t i = kept; i-- > 0;) {
      pattern[positions[i]] = kLetters[letters % alphabet];
      letters /= alphabet;
    }
    return pattern;
  }
  return std::nullopt;
}

const std::string* StarDictionary::pattern_for(std::string_view word) const {
  auto it = to_pattern_.find(std::string(word));
  return it == to_pattern_.end() ? nullptr : &it->second;
}

const std::string* StarDictionary::word_for(std::string_view pattern) const {
  auto it = to_word_.find(std::string(pattern));
  return it == to_word_.end() ? nullptr : &it->second;
}

StarDictionary build_star_dictionary(const std::vector<std::string>& ranked_words) {
  StarDictionary sd;
  std::map<std::size_t, PatternEnumerator> groups;
  for (const auto& word : ranked_words) {
    if (word.size() < kMinWordLength || sd.to_pattern_.contains(word)) continue;
    auto it = groups.try_emplace(word.size(), word.size()).first;
    auto pattern = it->second.next();
    if (!pattern) continue;
    sd.to_word_.emplace(*pattern, word);
    sd.to_pattern_.emplace(word, std::move(*pattern));
  }
  return sd;
}

StarDictionary build_star_dictionary(const RankedLexicon& lexicon) {
  std::vector<std::string> words;
  words.reserve(lexicon.size());
  for (const auto& e : lexicon) words.push_back(e.word);
  return build_star_dictionary(words);
}

Bytes star_encode(ByteView input, const StarDictionary& sd) {
  Bytes out;
  out.reserve(input.size() + input.size() / 64);
  for_each_token(input, [&](const Token& t) {
    if (t.is_word()) {
      const std::string* pattern = sd.pattern_for(t.text());
      if (pattern != nullptr)
        out.insert(out.end(), pattern->begin(), pattern->end());
      else
        out.insert(out.end(), t.bytes.begin(), t.bytes.end());
      return;
    }
    std::uint8_t b = t.bytes[0];
    if (b == kStar || b == kStarEscape) out.push_back(kStarEscape);
    out.push_back(b);
  });
  return out;
}

Bytes star_decode(ByteView in, const StarDictionary& sd) {
  Bytes out;
  out.reserve(in.size());
  std::size_t pos = 0;
  while (pos < in.size()) {
    std::uint8_t b = in[pos];
    if (b == kStarEscape) {
      if (pos + 1 >= in.size()) corrupt(pos, "dangling escape byte");
      std::uint8_t lit = in[pos + 1];
      if (lit != kStar && lit != kStarEscape) corrupt(pos, "invalid escape sequence");
      out.push_back(lit);
      pos += 2;
      continue;
    }
    if (!is_pattern_byte(b)) {
      out.push_back(b);
      ++pos;
      continue;
    }
    std::size_t end = pos;
    bool starred = false;
    while (end < in.size() && is_pattern_byte(in[end])) {
      starred = starred || in[end] == kStar;
      ++end;
    }
    std::string_view token(reinterpret_cast<const char*>(in.data() + pos), end - pos);
    if (starred) {
      const std::string* word = sd.word_for(token);
      if (word == nullptr) corrupt(pos, "unknown star pattern '" + std::string(token) + "'");
      out.insert(out.end(), word->begin(), word->end());
    } else {
      out.insert(out.end(), token.begin(), token.end());
    }
    pos = end;
  }
  return out;
}

}  // namespace idbe
