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

#ifndef IDBE_STAR_CODEC_HPP
#define IDBE_STAR_CODEC_HPP

#include <string>
#include <unordered_map>

#include "idbe/dictionary.hpp"

namespace idbe {

inline constexpr std::uint8_t kStar = '*';
inline constexpr std::uint8_t kStarEscape = 27;

// Star-encoding baseline. Within each word length, words in rank order take
// patterns from a fixed enumeration: all stars first, then one letter kept
// (position major, letter a..z A..Z minor), then two letters, and so on.
// Words beyond the enumeration stay unassigned and are written verbatim.
class StarDictionary {
 public:
  StarDictionary() = default;

  const std::string* pattern_for(std::string_view word) const;
  const std::string* word_for(std::string_view pattern) const;
  std::size_t size() const noexcept { return to_pattern_.size(); }

 private:
  friend StarDictionary build_star_dictionary(const std::vector<std::string>& ranked_words);

  std::unordered_map<std::string, std::string> to_pattern_;
  std::unordered_map<std::string, std::string> to_word_;
};

StarDictionary build_star_dictionary(const std::vector<std::string>& ranked_words);
StarDictionary build_star_dictionary(const RankedLexicon& lexicon);
inline StarDictionary build_star_dictionary(const Dictionary& dict) {
  return build_star_dictionary(dict.words());
}

// The n-th pattern (zero-based) of the enumeration for words of `length`
// letters, or nullopt once the enumeration is exhausted.
std::optional<std::string> star_pattern(std::size_t length, std::uint64_t index);

// Source '*' is written as ESC '*' and source ESC as ESC ESC.
Bytes star_encode(ByteView input, const StarDictionary& sd);
Bytes star_decode(ByteView encoded, const StarDictionary& sd);

}  // namespace idbe

#endif  // IDBE_STAR_CODEC_HPP
