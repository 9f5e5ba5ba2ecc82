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

#ifndef IDBE_DICTIONARY_HPP
#define IDBE_DICTIONARY_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "idbe/common.hpp"

namespace idbe {

// Codeword bytes are drawn from [33, 250]; 251..255 are reserved for markers.
inline constexpr std::uint8_t kCodeFirstByte = 33;
inline constexpr std::uint8_t kCodeLastByte = 250;
inline constexpr std::uint64_t kCodeAlphabet = 218;
inline constexpr std::size_t kMaxCodeLength = 4;
inline constexpr std::size_t kMinWordLength = 2;

// Number of ranks addressable with codes of length 1..4.
inline constexpr std::uint64_t kDictionaryCapacity =
    kCodeAlphabet + kCodeAlphabet * kCodeAlphabet +
    kCodeAlphabet * kCodeAlphabet * kCodeAlphabet +
    kCodeAlphabet * kCodeAlphabet * kCodeAlphabet * kCodeAlphabet;

constexpr bool is_code_byte(std::uint8_t b) noexcept {
  return b >= kCodeFirstByte && b <= kCodeLastByte;
}

struct CodeWord {
  std::array<std::uint8_t, kMaxCodeLength> data{};
  std::uint8_t length = 0;

  ByteView bytes() const noexcept { return {data.data(), length}; }
  bool operator==(const CodeWord& other) const noexcept {
    return length == other.length &&
           std::equal(data.begin(), data.begin() + length, other.data.begin());
  }
};

// Positional base-218 numbering: ranks [0, 218) get one byte, the next 218^2
// ranks get two bytes counted most-significant digit first, and so on.
CodeWord code_for_rank(std::uint64_t rank);

// Inverse of code_for_rank; nullopt if `code` is not a well-formed codeword.
std::optional<std::uint64_t> rank_for_code(ByteView code) noexcept;

struct LexiconEntry {
  std::string word;
  std::uint64_t frequency = 0;

  bool operator==(const LexiconEntry&) const = default;
};

// Descending frequency, ties by ascending byte order of the word.
using RankedLexicon = std::vector<LexiconEntry>;

RankedLexicon build_lexicon(std::span<const ByteView> training);

// Immutable word <-> codeword table. Codes are a pure function of rank.
class Dictionary {
 public:
  Dictionary() = default;

  // Throws DuplicateWord / IllegalWordByte / DictionaryOverflow.
  static Dictionary from_words(std::vector<std::string> words);

  const std::vector<std::string>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }

  // Forward lookup; nullptr when the word is not in the table.
  const CodeWord* find(std::string_view word) const;
  // Reverse lookup; nullopt for malformed or unassigned codes.
  std::optional<std::string_view> lookup(ByteView code) const noexcept;

  bool operator==(const Dictionary& other) const noexcept {
    return words_ == other.words_;
  }

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, CodeWord> forward_;
};

Dictionary build_dictionary(const RankedLexicon& lexicon);

// "IDBEDICT 1\n<count>\n<word>\n..." with LF line endings.
Bytes serialize_dictionary(const Dictionary& dict);
Dictionary parse_dictionary(ByteView bytes);

}  // namespace idbe

#endif  // IDBE_DICTIONARY_HPP
