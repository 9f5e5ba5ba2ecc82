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

#ifndef IDBE_BWT_STACK_HPP
#define IDBE_BWT_STACK_HPP

#include "idbe/common.hpp"

namespace idbe {

struct BwtBlock {
  Bytes last_column;
  std::uint32_t primary_index = 0;

  bool operator==(const BwtBlock&) const = default;
};

// Sorts all cyclic rotations (no sentinel); identical rotations are ordered
// by start offset. Prefix doubling with counting sorts, O(n log n).
// Throws InvalidArgument for an empty block.
BwtBlock bwt_forward(ByteView block);

// LF-mapping walk from the primary index.
Bytes bwt_inverse(const BwtBlock& block);

Bytes mtf_encode(ByteView data);
Bytes mtf_decode(ByteView data);

// A run of four equal bytes is followed by a count byte k meaning k more
// repeats, so one group covers 4..259 bytes.
inline constexpr std::size_t kRleThreshold = 4;
inline constexpr std::size_t kRleMaxExtra = 255;

Bytes rle_encode(ByteView data);
Bytes rle_decode(ByteView data);

}  // namespace idbe

#endif  // IDBE_BWT_STACK_HPP
