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

#ifndef IDBE_IDBE_CODEC_HPP
#define IDBE_IDBE_CODEC_HPP

#include "idbe/dictionary.hpp"

namespace idbe {

// Byte 250 + n announces a codeword of n bytes (n = 1..4).
inline constexpr std::uint8_t kLengthMarkerBase = 250;
inline constexpr std::uint8_t kFirstLengthMarker = 251;
inline constexpr std::uint8_t kLastLengthMarker = 254;
// Follows a coded word that is not followed by exactly one space.
inline constexpr std::uint8_t kNoSpace = 255;

constexpr bool is_length_marker(std::uint8_t b) noexcept {
  return b >= kFirstLengthMarker && b <= kLastLengthMarker;
}

constexpr bool is_reserved_byte(std::uint8_t b) noexcept { return b >= kFirstLengthMarker; }

// Dictionary words (length >= 2) become marker || codeword, and the single
// space after them is dropped. Any other byte passes through unchanged except
// 251..255, which are written twice.
Bytes idbe_encode(ByteView input, const Dictionary& dict);

// Throws CorruptStream with the offending byte offset on malformed input.
Bytes idbe_decode(ByteView encoded, const Dictionary& dict);

}  // namespace idbe

#endif  // IDBE_IDBE_CODEC_HPP
