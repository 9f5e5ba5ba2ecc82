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

#include "idbe/secure_transfer.hpp"

#include <openssl/crypto.h>
#include <openssl/evp.h>
#include <openssl/hmac.h>

#include <array>
#include <limits>

#include "idbe/pipeline.hpp"

namespace idbe {

namespace {

using Digest = std::array<std::uint8_t, kMacLength>;

Digest hmac_sha1(ByteView key, ByteView message) {
  Digest out{};
  unsigned int len = 0;
  if (HMAC(EVP_sha1(), key.data(), static_cast<int>(key.size()), message.data(),
           message.size(), out.data(), &len) == nullptr ||
      len != kMacLength)
    throw Error(ErrorCode::InvalidArgument, "HMAC-SHA1 computation failed");
  return out;
}

// Separate subkeys for the tag and the keystream.
Digest derive(ByteView key, std::string_view label) { return hmac_sha1(key, as_bytes(label)); }

Digest record_tag(ByteView key, std::uint8_t content_type, std::uint8_t version,
                  std::uint32_t sequence, ByteView payload) {
  Bytes msg;
  msg.reserve(6 + payload.size());
  msg.push_back(content_type);
  msg.push_back(version);
  put_be32(msg, sequence);
  msg.insert(msg.end(), payload.begin(), payload.end());
  Digest mac_key = derive(key, "idbe record mac");
  return hmac_sha1(mac_key, msg);
}

Bytes keystream_xor(ByteView key, std::uint32_t sequence, ByteView data) {
  Digest enc_key = derive(key, "idbe record keystream");
  Bytes out(data.begin(), data.end());
  Bytes nonce;
  for (std::size_t off = 0, counter = 0; off < out.size(); off += kMacLength, ++counter) {
    nonce.clear();
    put_be32(nonce, sequence);
    put_be32(nonce, static_cast<std::uint32_t>(counter));
    Digest block = hmac_sha1(enc_key, nonce);
    for (std::size_t i = 0; i < kMacLength && off + i < out.size(); ++i) out[off + i] ^= block[i];
  }
  return out;
}

[[noreturn]] void auth_failure(std::uint32_t sequence, const std::string& what) {
  throw Error(ErrorCode::AuthenticationFailure,
              "record " + std::to_string(sequence) + ": authentication failure (" + what + ")");
}

}  // namespace

SessionKey::SessionKey(Bytes key) : key_(std::move(key)) {
  if (key_.size() < kMinKeyLength)
    throw Error(ErrorCode::InvalidArgument,
                "session key must be at least 16 bytes, got " + std::to_string(key_.size()));
}

Bytes HmacKeystreamCipher::encrypt(ByteView key, std::uint32_t sequence,
                                   ByteView plaintext) const {
  return keystream_xor(key, sequence, plaintext);
}

Bytes HmacKeystreamCipher::decrypt(ByteView key, std::uint32_t sequence,
                                   ByteView ciphertext) const {
  return keystream_xor(key, sequence, ciphertext);
}

const Cipher& default_cipher() {
  static const HmacKeystreamCipher cipher;
  return cipher;
}

Bytes serialize_frame(const RecordFrame& frame) {
  if (frame.body.size() > std::numeric_limits<std::uint16_t>::max())
    throw Error(ErrorCode::InvalidArgument, "record body exceeds 65535 bytes");
  Bytes out;
  out.reserve(kRecordHeaderSize + frame.body.size());
  out.push_back(frame.content_type);
  out.push_back(frame.version);
  put_be32(out, frame.sequence);
  put_be16(out, static_cast<std::uint16_t>(frame.body.size()));
  out.insert(out.end(), frame.body.begin(), frame.body.end());
  return out;
}

std::vector<RecordFrame> parse_frames(ByteView data) {
  std::vector<RecordFrame> frames;
  std::size_t pos = 0;
  while (pos < data.size()) {
    const std::size_t index = frames.size();
    if (data.size() - pos < kRecordHeaderSize)
      throw Error(ErrorCode::AuthenticationFailure,
                  "record " + std::to_string(index) + ": truncated header cannot be authenticated");
    RecordFrame f;
    f.content_type = data[pos];
    f.version = data[pos + 1];
    f.sequence = static_cast<std::uint32_t>(get_be(data, pos + 2, 4));
    auto len = static_cast<std::size_t>(get_be(data, pos + 6, 2));
    pos += kRecordHeaderSize;
    if (data.size() - pos < len)
      throw Error(ErrorCode::AuthenticationFailure,
                  "record " + std::to_string(index) + ": body length runs past end of data");
    f.body.assign(data.begin() + pos, data.begin() + pos + len);
    pos += len;
    frames.push_back(std::move(f));
  }
  return frames;
}

std::vector<Bytes> fragment(ByteView data, std::size_t chunk_size) {
  if (chunk_size == 0) throw Error(ErrorCode::InvalidArgument, "fragment size must be positive");
  std::vector<Bytes> chunks;
  for (std::size_t off = 0; off < data.size(); off += chunk_size) {
    auto piece = data.subspan(off, std::min(chunk_size, data.size() - off));
    chunks.emplace_back(piece.begin(), piece.end());
  }
  return chunks;
}

RecordFrame protect(ByteView chunk, const SessionKey& key, std::uint32_t sequence,
                    bool compress_flag, const Cipher& cipher) {
  if (chunk.size() > kFragmentSize)
    throw Error(ErrorCode::InvalidArgument,
                "fragment of " + std::to_string(chunk.size()) + " bytes exceeds 16384");
  RecordFrame frame;
  frame.sequence = sequence;
  Bytes payload;
  if (compress_flag) {
    frame.content_type = kContentCompressedDictionaryFragment;
    PipelineConfig cfg;
    cfg.block_size = static_cast<std::uint32_t>(kFragmentSize);
    payload = compress(chunk, cfg, nullptr);
  } else {
    payload.assign(chunk.begin(), chunk.end());
  }
  Digest tag = record_tag(key.bytes(), frame.content_type, frame.version, sequence, payload);
  payload.insert(payload.end(), tag.begin(), tag.end());
  frame.body = cipher.encrypt(key.bytes(), sequence, payload);
  if (frame.body.size() > std::numeric_limits<std::uint16_t>::max())
    throw Error(ErrorCode::InvalidArgument, "protected record exceeds 65535 bytes");
  return frame;
}

Bytes unprotect(const RecordFrame& frame, const SessionKey& key, const Cipher& cipher) {
  if (frame.body.size() < kMacLength) auth_failure(frame.sequence, "body shorter than tag");
  Bytes plain = cipher.decrypt(key.bytes(), frame.sequence, frame.body);
  ByteView payload(plain.data(), plain.size() - kMacLength);
  ByteView tag(plain.data() + payload.size(), kMacLength);
  Digest expected =
      record_tag(key.bytes(), frame.content_type, frame.version, frame.sequence, payload);
  if (CRYPTO_memcmp(expected.data(), tag.data(), kMacLength) != 0)
    auth_failure(frame.sequence, "MAC mismatch");

  if (frame.version != kRecordVersion)
    throw Error(ErrorCode::UnsupportedVersion,
                "record version " + std::to_string(frame.version) + " not supported");
  switch (frame.content_type) {
    case kContentDictionaryFragment:
      return Bytes(payload.begin(), payload.end());
    case kContentCompressedDictionaryFragment:
      return decompress(payload, nullptr);
    default:
      throw Error(ErrorCode::MalformedHeader,
                  "unexpected record content type " + std::to_string(frame.content_type));
  }
}

Bytes pack_dictionary(const Dictionary& dict, const SessionKey& key, bool compress_flag,
                      const Cipher& cipher) {
  Bytes serialized = serialize_dictionary(dict);
  auto chunks = fragment(serialized);
  if (chunks.size() > std::numeric_limits<std::uint32_t>::max())
    throw Error(ErrorCode::InvalidArgument, "dictionary needs more than 2^32 records");
  Bytes out;
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    Bytes frame = serialize_frame(
        protect(chunks[i], key, static_cast<std::uint32_t>(i), compress_flag, cipher));
    out.insert(out.end(), frame.begin(), frame.end());
  }
  return out;
}

Dictionary unpack_dictionary(ByteView records, const SessionKey& key, const Cipher& cipher) {
  auto frames = parse_frames(records);
  Bytes serialized;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    Bytes chunk = unprotect(frames[i], key, cipher);
    if (frames[i].sequence != i)
      throw Error(ErrorCode::SequenceGap, "record " + std::to_string(i) + ": expected sequence " +
                                              std::to_string(i) + ", got " +
                                              std::to_string(frames[i].sequence));
    serialized.insert(serialized.end(), chunk.begin(), chunk.end());
  }
  return parse_dictionary(serialized);
}

}  // namespace idbe
