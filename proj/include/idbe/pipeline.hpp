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

#ifndef IDBE_PIPELINE_HPP
#define IDBE_PIPELINE_HPP

#include <optional>

#include "idbe/dictionary.hpp"

namespace idbe {

enum class Transform : std::uint8_t { None = 0, Star = 1, Idbe = 2 };
enum class DictionarySource : std::uint8_t { External = 0, Embedded = 1, NotNeeded = 2 };

const char* transform_name(Transform t) noexcept;
std::optional<Transform> parse_transform(std::string_view name) noexcept;

inline constexpr std::uint32_t kDefaultBlockSize = 921600;
inline constexpr std::uint32_t kMinBlockSize = 1024;
inline constexpr std::uint32_t kMaxBlockSize = 16u << 20;

struct PipelineConfig {
  Transform transform = Transform::None;
  std::uint32_t block_size = kDefaultBlockSize;
  DictionarySource dictionary_source = DictionarySource::NotNeeded;

  // Throws InvalidArgument when the invariants do not hold.
  void validate() const;
};

// Container layout, all integers big-endian:
//   "BWT1" | version u8 | transform u8 | block_size u32 | dict_flag u8
//   | [dict_len u32 | dict bytes]   (dict_flag == 1 only)
//   | block_count u32
//   | per block: raw_len u32 | primary_index u32 | payload_len u32 | payload
// payload = ari_encode(rle_encode(mtf_encode(bwt.last_column))).
inline constexpr std::uint8_t kContainerVersion = 1;

struct ContainerHeader {
  Transform transform = Transform::None;
  std::uint32_t block_size = kDefaultBlockSize;
  DictionarySource dictionary_source = DictionarySource::NotNeeded;
  std::optional<Dictionary> embedded_dictionary;
  std::uint32_t block_count = 0;
};

// `dict` must be given iff cfg.transform != None.
Bytes compress(ByteView input, const PipelineConfig& cfg, const Dictionary* dict);

// `dict` is consulted only when the container references an external one.
Bytes decompress(ByteView container, const Dictionary* dict);

// Parses the header only; `consumed` receives its length in bytes.
ContainerHeader read_container_header(ByteView container, std::size_t* consumed = nullptr);

// Backend on one block, exposed for tests and the transfer protocol.
Bytes encode_payload(ByteView last_column);
Bytes decode_payload(ByteView payload);

// Apply or invert the front-end transform on a whole stream.
Bytes forward_transform(ByteView input, Transform t, const Dictionary* dict);
Bytes inverse_transform(ByteView input, Transform t, const Dictionary* dict);

// 8 * compressed / original. Throws InvalidArgument for original == 0.
double bpc(std::uint64_t original_size, std::uint64_t compressed_size);

}  // namespace idbe

#endif  // IDBE_PIPELINE_HPP
