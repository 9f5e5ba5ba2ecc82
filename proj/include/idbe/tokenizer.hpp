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

#ifndef IDBE_TOKENIZER_HPP
#define IDBE_TOKENIZER_HPP

#include <vector>

#include "idbe/common.hpp"

namespace idbe {

enum class TokenKind : std::uint8_t { Word, Single };

// A view into the tokenized buffer. Word tokens are maximal runs of ASCII
// letters (case preserved); every other byte is its own Single token.
struct Token {
  TokenKind kind;
  ByteView bytes;

  bool is_word() const noexcept { return kind == TokenKind::Word; }
  std::string_view text() const noexcept {
    return {reinterpret_cast<const char*>(bytes.data()), bytes.size()};
  }
};

constexpr bool is_ascii_letter(std::uint8_t b) noexcept {
  return (b >= 'A' && b <= 'Z') || (b >= 'a' && b <= 'z');
}

// Length of the letter run starting at `pos` (0 if input[pos] is not a letter).
std::size_t letter_run(ByteView input, std::size_t pos) noexcept;

// Tokens reference `input`; it must outlive the returned vector.
std::vector<Token> tokenize(ByteView input);

// Streaming form, avoids materializing the token vector for large buffers.
template <class Visitor>
void for_each_token(ByteView input, Visitor&& visit) {
  std::size_t pos = 0;
  while (pos < input.size()) {
    std::size_t run = letter_run(input, pos);
    if (run > 0) {
      visit(Token{TokenKind::Word, input.subspan(pos, run)});
      pos += run;
    } else {
      visit(Token{TokenKind::Single, input.subspan(pos, 1)});
      ++pos;
    }
  }
}

}  // namespace idbe

#endif  // IDBE_TOKENIZER_HPP
