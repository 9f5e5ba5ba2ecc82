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

#ifndef IDBE_ENTROPY_CODER_HPP
#define IDBE_ENTROPY_CODER_HPP

#include <array>

#include "idbe/common.hpp"

namespace idbe {

// Adaptive order-0 byte model. Counts start at 1, grow by 32 per coded
// symbol and are halved (rounding up) once the total passes 2^16.
class FrequencyModel {
 public:
  static constexpr std::uint32_t kIncrement = 32;
  static constexpr std::uint32_t kMaxTotal = 1u << 16;

  FrequencyModel() { counts_.fill(1); }

  std::uint32_t total() const noexcept { return total_; }
  std::uint32_t count(std::uint8_t symbol) const noexcept { return counts_[symbol]; }
  std::uint32_t cumulative(std::uint8_t symbol) const noexcept;

  // Symbol whose interval [cum, cum + count) holds `target`; writes cum.
  std::uint8_t find(std::uint32_t target, std::uint32_t& cum) const noexcept;

  void update(std::uint8_t symbol) noexcept;

 private:
  std::array<std::uint32_t, 256> counts_;
  std::uint32_t total_ = 256;
};

inline constexpr std::size_t kAriHeaderSize = 8;

// 8-byte big-endian length, then the range-coded body.
Bytes ari_encode(ByteView data);
Bytes ari_decode(ByteView coded);

}  // namespace idbe

#endif  // IDBE_ENTROPY_CODER_HPP
