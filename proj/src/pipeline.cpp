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

#include "idbe/pipeline.hpp"

#include "idbe/bwt_stack.hpp"
#include "idbe/entropy_coder.hpp"
#include "idbe/idbe_codec.hpp"
#include "idbe/star_codec.hpp"

namespace idbe {

namespace {

constexpr std::string_view kMagic = "BWT1";
constexpr std::size_t kBlockHeaderSize = 12;

// Bounds-checked cursor over the container.
class Reader {
 public:
  explicit Reader(ByteView in) : in_(in) {}

  bool has(std::size_t n) const noexcept { return in_.size() - pos_ >= n; }
  std::size_t position() const noexcept { return pos_; }
  std::size_t remaining() const noexcept { return in_.size() - pos_; }

  std::uint64_t be(std::size_t width, const char* what) {
    need(width, what);
    auto v = get_be(in_, pos_, width);
    pos_ += width;
    return v;
  }

  ByteView take(std::size_t n, const char* what) {
    need(n, what);
    auto v = in_.subspan(pos_, n);
    pos_ += n;
    return v;
  }

 private:
  void need(std::size_t n, const char* what) const {
    if (!has(n))
      throw Error(ErrorCode::MalformedHeader, std::string("container truncated in ") + what);
  }

  ByteView in_;
  std::size_t pos_ = 0;
};

const Dictionary& require_dict(const Dictionary* dict, Transform t) {
  if (dict == nullptr)
    throw Error(ErrorCode::DictionaryMissing,
                std::string("transform '") + transform_name(t) + "' requires a dictionary");
  return *dict;
}

}  // namespace

const char* transform_name(Transform t) noexcept {
  switch (t) {
    case Transform::None: return "none";
    case Transform::Star: return "star";
    case Transform::Idbe: return "idbe";
  }
  return "unknown";
}

std::optional<Transform> parse_transform(std::string_view name) noexcept {
  if (name == "none") return Transform::None;
  if (name == "star") return Transform::Star;
  if (name == "idbe") return Transform::Idbe;
  return std::nullopt;
}

void PipelineConfig::validate() const {
  if (block_size < kMinBlockSize || block_size > kMaxBlockSize)
    throw Error(ErrorCode::InvalidArgument,
                "block size " + std::to_string(block_size) + " outside [1 KiB, 16 MiB]");
  if (transform != Transform::None && dictionary_source == DictionarySource::NotNeeded)
    throw Error(ErrorCode::InvalidArgument,
                std::string("transform '") + transform_name(transform) +
                    "' needs an external or embedded dictionary");
}

Bytes forward_transform(ByteView input, Transform t, const Dictionary* dict) {
  switch (t) {
    case Transform::None: return Bytes(input.begin(), input.end());
    case Transform::Star: return star_encode(input, build_star_dictionary(require_dict(dict, t)));
    case Transform::Idbe: return idbe_encode(input, require_dict(dict, t));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown transform");
}

Bytes inverse_transform(ByteView input, Transform t, const Dictionary* dict) {
  switch (t) {
    case Transform::None: return Bytes(input.begin(), input.end());
    case Transform::Star: return star_decode(input, build_star_dictionary(require_dict(dict, t)));
    case Transform::Idbe: return idbe_decode(input, require_dict(dict, t));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown transform");
}

Bytes encode_payload(ByteView last_column) {
  return ari_encode(rle_encode(mtf_encode(last_column)));
}

Bytes decode_payload(ByteView payload) {
  return mtf_decode(rle_decode(ari_decode(payload)));
}

Bytes compress(ByteView input, const PipelineConfig& cfg, const Dictionary* dict) {
  cfg.validate();
  if (cfg.transform != Transform::None) require_dict(dict, cfg.transform);

  Bytes stream = forward_transform(input, cfg.transform, dict);
  const std::size_t block_count = (stream.size() + cfg.block_size - 1) / cfg.block_size;
  if (block_count > 0xFFFFFFFFull)
    throw Error(ErrorCode::InvalidArgument, "input needs more than 2^32 blocks");

  Bytes out(kMagic.begin(), kMagic.end());
  out.push_back(kContainerVersion);
  out.push_back(static_cast<std::uint8_t>(cfg.transform));
  put_be32(out, cfg.block_size);
  DictionarySource source =
      cfg.transform == Transform::None ? DictionarySource::NotNeeded : cfg.dictionary_source;
  out.push_back(static_cast<std::uint8_t>(source));
  if (source == DictionarySource::Embedded) {
    Bytes dict_bytes = serialize_dictionary(*dict);
    put_be32(out, static_cast<std::uint32_t>(dict_bytes.size()));
    out.insert(out.end(), dict_bytes.begin(), dict_bytes.end());
  }
  put_be32(out, static_cast<std::uint32_t>(block_count));

  ByteView all(stream);
  for (std::size_t i = 0; i < block_count; ++i) {
    ByteView block = all.subspan(i * cfg.block_size,
                                 std::min<std::size_t>(cfg.block_size, all.size() - i * cfg.block_size));
    BwtBlock bwt = bwt_forward(block);
    Bytes payload = encode_payload(bwt.last_column);
    put_be32(out, static_cast<std::uint32_t>(block.size()));
    put_be32(out, bwt.primary_index);
    put_be32(out, static_cast<std::uint32_t>(payload.size()));
    out.insert(out.end(), payload.begin(), payload.end());
  }
  return out;
}

ContainerHeader read_container_header(ByteView container, std::size_t* consumed) {
  Reader r(container);
  ByteView magic = r.take(kMagic.size(), "magic");
  if (!std::equal(magic.begin(), magic.end(), kMagic.begin()))
    throw Error(ErrorCode::MalformedHeader, "bad container magic");
  auto version = r.be(1, "version");
  if (version != kContainerVersion)
    throw Error(ErrorCode::UnsupportedVersion,
                "unsupported container version " + std::to_string(version));

  ContainerHeader h;
  auto transform = r.be(1, "transform");
  if (transform > static_cast<std::uint8_t>(Transform::Idbe))
    throw Error(ErrorCode::MalformedHeader, "unknown transform id " + std::to_string(transform));
  h.transform = static_cast<Transform>(transform);
  h.block_size = static_cast<std::uint32_t>(r.be(4, "block size"));
  if (h.block_size < kMinBlockSize || h.block_size > kMaxBlockSize)
    throw Error(ErrorCode::MalformedHeader, "block size out of range");
  auto flag = r.be(1, "dictionary flag");
  if (flag > static_cast<std::uint8_t>(DictionarySource::NotNeeded))
    throw Error(ErrorCode::MalformedHeader, "unknown dictionary flag " + std::to_string(flag));
  h.dictionary_source = static_cast<DictionarySource>(flag);
  if ((h.transform == Transform::None) != (h.dictionary_source == DictionarySource::NotNeeded))
    throw Error(ErrorCode::MalformedHeader, "dictionary flag inconsistent with transform");
  if (h.dictionary_source == DictionarySource::Embedded) {
    auto len = r.be(4, "embedded dictionary length");
    h.embedded_dictionary = parse_dictionary(r.take(len, "embedded dictionary"));
  }
  h.block_count = static_cast<std::uint32_t>(r.be(4, "block count"));
  if (consumed != nullptr) *consumed = r.position();
  return h;
}

Bytes decompress(ByteView container, const Dictionary* dict) {
  std::size_t offset = 0;
  ContainerHeader h = read_container_header(container, &offset);
  const Dictionary* use = nullptr;
  if (h.dictionary_source == DictionarySource::Embedded) {
    use = &*h.embedded_dictionary;
  } else if (h.dictionary_source == DictionarySource::External) {
    if (dict == nullptr)
      throw Error(ErrorCode::DictionaryMissing,
                  "container references an external dictionary but none was supplied");
    use = dict;
  }

  Reader r(container.subspan(offset));
  Bytes stream;
  for (std::uint32_t i = 0; i < h.block_count; ++i) {
    auto fail = [&](const std::string& what) -> Error {
      return Error(ErrorCode::CorruptStream, "block " + std::to_string(i) + ": " + what);
    };
    if (!r.has(kBlockHeaderSize)) throw fail("container truncated in block header");
    auto raw_len = r.be(4, "raw length");
    auto primary = static_cast<std::uint32_t>(r.be(4, "primary index"));
    auto payload_len = r.be(4, "payload length");
    if (raw_len == 0 || raw_len > h.block_size) throw fail("raw length out of range");
    if (!r.has(payload_len)) throw fail("container truncated in payload");
    ByteView payload = r.take(payload_len, "payload");
    Bytes last;
    try {
      last = decode_payload(payload);
    } catch (const Error& e) {
      throw fail(e.what());
    }
    if (last.size() != raw_len)
      throw fail("decoded " + std::to_string(last.size()) + " bytes, header says " +
                 std::to_string(raw_len));
    if (primary >= raw_len) throw fail("primary index out of range");
    Bytes block = bwt_inverse({std::move(last), primary});
    stream.insert(stream.end(), block.begin(), block.end());
  }
  if (r.remaining() != 0)
    throw Error(ErrorCode::CorruptStream, "trailing bytes after last block");
  return inverse_transform(stream, h.transform, use);
}

double bpc(std::uint64_t original_size, std::uint64_t compressed_size) {
  if (original_size == 0)
    throw Error(ErrorCode::InvalidArgument, "bits per character undefined for empty input");
  return 8.0 * static_cast<double>(compressed_size) / static_cast<double>(original_size);
}

}  // namespace idbe
