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

#ifndef IDBE_SECURE_TRANSFER_HPP
#define IDBE_SECURE_TRANSFER_HPP

#include <vector>

#include "idbe/dictionary.hpp"

namespace idbe {

// Record layer for shipping a dictionary between peers:
//
//   content_type u8 | version u8 | sequence u32 | body_length u16 | body
//
// body = Encrypt(key, nonce(sequence), fragment || HMAC-SHA1 tag), where the
// tag covers content_type || version || sequence || fragment. Content type 1
// carries the fragment as is, type 2 carries it through the transform-None
// compressor.
//
// This is a demonstration format. The default cipher is an HMAC keystream,
// which is NOT a vetted encryption scheme.

inline constexpr std::uint8_t kRecordVersion = 1;
inline constexpr std::uint8_t kContentDictionaryFragment = 1;
inline constexpr std::uint8_t kContentCompressedDictionaryFragment = 2;
inline constexpr std::size_t kFragmentSize = 16384;
inline constexpr std::size_t kMacLength = 20;
inline constexpr std::size_t kRecordHeaderSize = 8;
inline constexpr std::size_t kMinKeyLength = 16;

class SessionKey {
 public:
  // Throws InvalidArgument for keys shorter than 16 bytes.
  explicit SessionKey(Bytes key);

  ByteView bytes() const noexcept { return key_; }

 private:
  Bytes key_;
};

// Symmetric cipher applied to fragment || tag.
class Cipher {
 public:
  virtual ~Cipher() = default;
  virtual Bytes encrypt(ByteView key, std::uint32_t sequence, ByteView plaintext) const = 0;
  virtual Bytes decrypt(ByteView key, std::uint32_t sequence, ByteView ciphertext) const = 0;
};

// XOR with HMAC-SHA1(key, sequence || counter) blocks.
class HmacKeystreamCipher final : public Cipher {
 public:
  Bytes encrypt(ByteView key, std::uint32_t sequence, ByteView plaintext) const override;
  Bytes decrypt(ByteView key, std::uint32_t sequence, ByteView ciphertext) const override;
};

const Cipher& default_cipher();

struct RecordFrame {
  std::uint8_t content_type = kContentDictionaryFragment;
  std::uint8_t version = kRecordVersion;
  std::uint32_t sequence = 0;
  Bytes body;

  bool operator==(const RecordFrame&) const = default;
};

Bytes serialize_frame(const RecordFrame& frame);

// Splits a concatenation of frames. A length field that runs past the end of
// the data is reported as AuthenticationFailure: the record cannot be
// authenticated.
std::vector<RecordFrame> parse_frames(ByteView data);

std::vector<Bytes> fragment(ByteView data, std::size_t chunk_size = kFragmentSize);

RecordFrame protect(ByteView chunk, const SessionKey& key, std::uint32_t sequence,
                    bool compress, const Cipher& cipher = default_cipher());

// Verifies the tag (constant time) before looking at anything else.
Bytes unprotect(const RecordFrame& frame, const SessionKey& key,
                const Cipher& cipher = default_cipher());

Bytes pack_dictionary(const Dictionary& dict, const SessionKey& key, bool compress = true,
                      const Cipher& cipher = default_cipher());
Dictionary unpack_dictionary(ByteView records, const SessionKey& key,
                             const Cipher& cipher = default_cipher());

}  // namespace idbe

#endif  // IDBE_SECURE_TRANSFER_HPP
