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

#include "idbe/dictionary.hpp"

#include <charconv>

#include "idbe/tokenizer.hpp"

namespace idbe {

namespace {

constexpr std::string_view kHeaderPrefix = "IDBEDICT ";
constexpr std::string_view kHeader = "IDBEDICT 1";

// Size of each code-length band: 218, 218^2, 218^3, 218^4.
constexpr std::array<std::uint64_t, kMaxCodeLength> kBandSize = {
    kCodeAlphabet, kCodeAlphabet * kCodeAlphabet,
    kCodeAlphabet * kCodeAlphabet * kCodeAlphabet,
    kCodeAlphabet * kCodeAlphabet * kCodeAlphabet * kCodeAlphabet};

void validate_word(std::string_view word) {
  if (word.size() < kMinWordLength)
    throw Error(ErrorCode::IllegalWordByte,
                "dictionary word shorter than 2 bytes: '" + std::string(word) + "'");
  for (unsigned char c : word) {
    if (!is_ascii_letter(c))
      throw Error(ErrorCode::IllegalWordByte,
                  "dictionary word contains non-letter byte " + std::to_string(c));
  }
}

}  // namespace

CodeWord code_for_rank(std::uint64_t rank) {
  if (rank >= kDictionaryCapacity)
    throw Error(ErrorCode::DictionaryOverflow,
                "rank " + std::to_string(rank) + " exceeds codeword capacity");
  std::size_t width = 1;
  for (std::uint64_t band : kBandSize) {
    if (rank < band) break;
    rank -= band;
    ++width;
  }
  CodeWord code;
  code.length = static_cast<std::uint8_t>(width);
  for (std::size_t i = width; i-- > 0;) {
    code.data[i] = static_cast<std::uint8_t>(kCodeFirstByte + rank % kCodeAlphabet);
    rank /= kCodeAlphabet;
  }
  return code;
}

std::optional<std::uint64_t> rank_for_code(ByteView code) noexcept {
  if (code.empty() || code.size() > kMaxCodeLength) return std::nullopt;
  std::uint64_t offset = 0;
  for (std::size_t i = 0; i + 1 < code.size(); ++i) offset += kBandSize[i];
  std::uint64_t digits = 0;
  for (std::uint8_t b : code) {
    if (!is_code_byte(b)) return std::nullopt;
    digits = digits * kCodeAlphabet + (b - kCodeFirstByte);
  }
  return offset + digits;
}

RankedLexicon build_lexicon(std::span<const ByteView> training) {
  std::unordered_map<std::string, std::uint64_t> counts;
  for (ByteView input : training) {
    for_each_token(input, [&](const Token& t) {
      if (t.is_word() && t.bytes.size() >= kMinWordLength)
        ++counts[std::string(t.text())];
    });
  }
  RankedLexicon lexicon;
  lexicon.reserve(counts.size());
  for (auto& [word, n] : counts) lexicon.push_back({word, n});
  std::sort(lexicon.begin(), lexicon.end(),
            [](const LexiconEntry& a, const LexiconEntry& b) {
              if (a.frequency != b.frequency) return a.frequency > b.frequency;
              return a.word < b.word;
            });
  return lexicon;
}

Dictionary Dictionary::from_words(std::vector<std::string> words) {
  if (words.size() > kDictionaryCapacity)
    throw Error(ErrorCode::DictionaryOverflow,
                std::to_string(words.size()) + " words exceed codeword capacity");
  Dictionary dict;
  dict.forward_.reserve(words.size());
  for (std::size_t rank = 0; rank < words.size(); ++rank) {
    validate_word(words[rank]);
    auto [it, inserted] = dict.forward_.emplace(words[rank], code_for_rank(rank));
    if (!inserted)
      throw Error(ErrorCode::DuplicateWord, "duplicate dictionary word '" + words[rank] + "'");
  }
  dict.words_ = std::move(words);
  return dict;
}

const CodeWord* Dictionary::find(std::string_view word) const {
  auto it = forward_.find(std::string(word));
  return it == forward_.end() ? nullptr : &it->second;
}

std::optional<std::string_view> Dictionary::lookup(ByteView code) const noexcept {
  auto rank = rank_for_code(code);
  if (!rank || *rank >= words_.size()) return std::nullopt;
  return std::string_view(words_[*rank]);
}

Dictionary build_dictionary(const RankedLexicon& lexicon) {
  std::vector<std::string> words;
  words.reserve(lexicon.size());
  for (const auto& e : lexicon) words.push_back(e.word);
  return Dictionary::from_words(std::move(words));
}

Bytes serialize_dictionary(const Dictionary& dict) {
  std::string out;
  out.append(kHeader).push_back('\n');
  out.append(std::to_string(dict.size())).push_back('\n');
  for (const auto& w : dict.words()) out.append(w).push_back('\n');
  return to_bytes(out);
}

Dictionary parse_dictionary(ByteView bytes) {
  std::string_view text(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  auto next_line = [&](const char* what) {
    auto nl = text.find('\n');
    if (nl == std::string_view::npos)
      throw Error(ErrorCode::MalformedHeader, std::string("dictionary truncated in ") + what);
    auto line = text.substr(0, nl);
    text.remove_prefix(nl + 1);
    return line;
  };

  auto header = next_line("header");
  if (header != kHeader) {
    if (header.starts_with(kHeaderPrefix))
      throw Error(ErrorCode::UnsupportedVersion,
                  "unsupported dictionary version '" +
                      std::string(header.substr(kHeaderPrefix.size())) + "'");
    throw Error(ErrorCode::MalformedHeader, "missing IDBEDICT header");
  }

  auto count_line = next_line("word count");
  std::uint64_t count = 0;
  auto [ptr, ec] = std::from_chars(count_line.data(), count_line.data() + count_line.size(), count);
  if (ec != std::errc() || ptr != count_line.data() + count_line.size() || count_line.empty())
    throw Error(ErrorCode::MalformedHeader, "bad word count line");
  if (count > kDictionaryCapacity)
    throw Error(ErrorCode::DictionaryOverflow, "word count exceeds codeword capacity");
  // Each word takes at least three bytes, which bounds the reservation.
  if (count > text.size() / 3 + 1)
    throw Error(ErrorCode::MalformedHeader, "word count larger than file");

  std::vector<std::string> words;
  words.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) words.emplace_back(next_line("word list"));
  if (!text.empty())
    throw Error(ErrorCode::MalformedHeader, "trailing bytes after word list");
  return Dictionary::from_words(std::move(words));
}

}  // namespace idbe
