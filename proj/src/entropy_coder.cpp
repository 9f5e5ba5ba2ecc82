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

#include "idbe/entropy_coder.hpp"

#include <algorithm>

namespace idbe {

namespace {

// Carry-less 32-bit range coder (Subbotin). Totals must stay <= kBot.
constexpr std::uint32_t kTop = 1u << 24;
constexpr std::uint32_t kBot = 1u << 16;
static_assert(FrequencyModel::kMaxTotal <= kBot);

class RangeEncoder {
 public:
  explicit RangeEncoder(Bytes& out) : out_(out) {}

  void encode(std::uint32_t cum, std::uint32_t freq, std::uint32_t total) {
    range_ /= total;
    low_ += cum * range_;
    range_ *= freq;
    while ((low_ ^ (low_ + range_)) < kTop ||
           (range_ < kBot && ((range_ = (0u - low_) & (kBot - 1)), true))) {
      out_.push_back(static_cast<std::uint8_t>(low_ >> 24));
      low_ <<= 8;
      range_ <<= 8;
    }
  }

  void flush() {
    for (int i = 0; i < 4; ++i) {
      out_.push_back(static_cast<std::uint8_t>(low_ >> 24));
      low_ <<= 8;
    }
  }

 private:
  Bytes& out_;
  std::uint32_t low_ = 0;
  std::uint32_t range_ = 0xFFFFFFFFu;
};

class RangeDecoder {
 public:
  explicit RangeDecoder(ByteView in) : in_(in) {
    for (int i = 0; i < 4; ++i) code_ = (code_ << 8) | next();
  }

  std::uint32_t target(std::uint32_t total) {
    range_ /= total;
    std::uint32_t v = (code_ - low_) / range_;
    if (v >= total) corrupt("code value outside model range");
    return v;
  }

  void consume(std::uint32_t cum, std::uint32_t freq) {
    low_ += cum * range_;
    range_ *= freq;
    while ((low_ ^ (low_ + range_)) < kTop ||
           (range_ < kBot && ((range_ = (0u - low_) & (kBot - 1)), true))) {
      code_ = (code_ << 8) | next();
      low_ <<= 8;
      range_ <<= 8;
    }
  }

  std::size_t position() const noexcept { return pos_; }

 private:
  std::uint8_t next() {
    if (pos_ >= in_.size()) corrupt("arithmetic-coded stream truncated");
    return in_[pos_++];
  }

  [[noreturn]] void corrupt(const char* what) const {
    throw Error(ErrorCode::CorruptStream,
                std::string(what) + " at byte " + std::to_string(kAriHeaderSize + pos_));
  }

  ByteView in_;
  std::size_t pos_ = 0;
  std::uint32_t low_ = 0;
  std::uint32_t range_ = 0xFFFFFFFFu;
  std::uint32_t code_ = 0;
};

}  // namespace

std::uint32_t FrequencyModel::cumulative(std::uint8_t symbol) const noexcept {
  std::uint32_t cum = 0;
  for (std::size_t s = 0; s < symbol; ++s) cum += counts_[s];
  return cum;
}

std::uint8_t FrequencyModel::find(std::uint32_t target, std::uint32_t& cum) const noexcept {
  std::uint32_t acc = 0;
  std::size_t s = 0;
  while (s < 255 && acc + counts_[s] <= target) acc += counts_[s++];
  cum = acc;
  return static_cast<std::uint8_t>(s);
}

void FrequencyModel::update(std::uint8_t symbol) noexcept {
  counts_[symbol] += kIncrement;
  total_ += kIncrement;
  if (total_ <= kMaxTotal) return;
  total_ = 0;
  for (auto& c : counts_) {
    c = (c + 1) / 2;
    total_ += c;
  }
}

Bytes ari_encode(ByteView data) {
  Bytes out;
  out.reserve(kAriHeaderSize + data.size() + 16);
  put_be64(out, data.size());
  if (data.empty()) return out;

  FrequencyModel model;
  RangeEncoder enc(out);
  for (std::uint8_t b : data) {
    enc.encode(model.cumulative(b), model.count(b), model.total());
    model.update(b);
  }
  enc.flush();
  return out;
}

Bytes ari_decode(ByteView coded) {
  if (coded.size() < kAriHeaderSize)
    throw Error(ErrorCode::CorruptStream, "arithmetic-coded stream shorter than its header");
  const std::uint64_t n = get_be(coded, 0, kAriHeaderSize);
  ByteView body = coded.subspan(kAriHeaderSize);
  Bytes out;
  if (n == 0) {
    if (!body.empty())
      throw Error(ErrorCode::CorruptStream, "trailing bytes after empty arithmetic-coded stream");
    return out;
  }
  // Reservation is capped; the length field is untrusted until decoding ends.
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(n, body.size() * 4096ull)));

  FrequencyModel model;
  RangeDecoder dec(body);
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint32_t cum = 0;
    std::uint8_t s = model.find(dec.target(model.total()), cum);
    dec.consume(cum, model.count(s));
    model.update(s);
    out.push_back(s);
  }
  if (dec.position() != body.size())
    throw Error(ErrorCode::CorruptStream,
                "trailing bytes after arithmetic-coded stream at byte " +
                    std::to_string(kAriHeaderSize + dec.position()));
  return out;
}

}  // namespace idbe
