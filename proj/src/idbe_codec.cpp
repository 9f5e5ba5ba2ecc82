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

#include "idbe/idbe_codec.hpp"

#include "idbe/tokenizer.hpp"

namespace idbe {

namespace {

[[noreturn]] void corrupt(std::size_t offset, const std::string& what) {
  throw Error(ErrorCode::CorruptStream,
              "corrupt IDBE stream at byte " + std::to_string(offset) + ": " + what);
}

std::size_t run_length(ByteView in, std::size_t pos) noexcept {
  std::size_t end = pos + 1;
  while (end < in.size() && in[end] == in[pos]) ++end;
  return end - pos;
}

}  // namespace

Bytes idbe_encode(ByteView input, const Dictionary& dict) {
  Bytes out;
  out.reserve(input.size());
  std::size_t pos = 0;
  while (pos < input.size()) {
    std::uint8_t b = input[pos];
    std::size_t run = letter_run(input, pos);
    if (run >= kMinWordLength) {
      std::string_view word(reinterpret_cast<const char*>(input.data() + pos), run);
      pos += run;
      const CodeWord* code = dict.find(word);
      if (code == nullptr) {
        out.insert(out.end(), word.begin(), word.end());
        continue;
      }
      out.push_back(static_cast<std::uint8_t>(kLengthMarkerBase + code->length));
      auto cb = code->bytes();
      out.insert(out.end(), cb.begin(), cb.end());
      // At end of input there is no space to elide, so the marker is needed too.
      if (pos < input.size() && input[pos] == ' ')
        ++pos;
      else
        out.push_back(kNoSpace);
      continue;
    }
    out.push_back(b);
    if (is_reserved_byte(b)) out.push_back(b);
    ++pos;
  }
  return out;
}

Bytes idbe_decode(ByteView in, const Dictionary& dict) {
  Bytes out;
  out.reserve(in.size() + in.size() / 2);
  bool after_word = false;
  std::size_t pos = 0;
  while (pos < in.size()) {
    std::uint8_t b = in[pos];

    if (b == kNoSpace) {
      std::size_t m = run_length(in, pos);
      if (after_word) {
        if (m % 2 == 0) out.push_back(' ');
      } else if (m % 2 != 0) {
        corrupt(pos, "unpaired 0xFF outside a coded word");
      }
      out.insert(out.end(), m / 2, kNoSpace);
      pos += m;
      after_word = false;
      continue;
    }

    if (after_word) out.push_back(' ');
    after_word = false;

    if (!is_length_marker(b)) {
      out.push_back(b);
      ++pos;
      continue;
    }

    std::size_t m = run_length(in, pos);
    out.insert(out.end(), m / 2, b);
    pos += m;
    if (m % 2 == 0) continue;

    std::size_t marker_at = pos - 1;
    std::size_t width = b - kLengthMarkerBase;
    if (in.size() - pos < width) corrupt(marker_at, "codeword truncated");
    ByteView code = in.subspan(pos, width);
    for (std::size_t i = 0; i < width; ++i) {
      if (!is_code_byte(code[i])) corrupt(pos + i, "byte outside codeword alphabet");
    }
    auto word = dict.lookup(code);
    if (!word) corrupt(marker_at, "codeword not in dictionary");
    out.insert(out.end(), word->begin(), word->end());
    pos += width;
    after_word = true;
  }
  if (after_word) out.push_back(' ');
  return out;
}

}  // namespace idbe
