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

#include "idbe/bwt_stack.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace idbe {

BwtBlock bwt_forward(ByteView s) {
  const std::size_t n = s.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "BWT block must not be empty");
  if (n > std::numeric_limits<std::uint32_t>::max())
    throw Error(ErrorCode::InvalidArgument, "BWT block too large");

  // p: rotation start offsets in sorted order; c: equivalence class of each
  // rotation by its first h bytes.
  std::vector<std::uint32_t> p(n), c(n), pn(n), cn(n);
  std::vector<std::uint32_t> cnt(std::max<std::size_t>(256, n), 0);

  for (std::size_t i = 0; i < n; ++i) ++cnt[s[i]];
  for (std::size_t v = 1; v < 256; ++v) cnt[v] += cnt[v - 1];
  for (std::size_t i = n; i-- > 0;) p[--cnt[s[i]]] = static_cast<std::uint32_t>(i);

  std::uint32_t classes = 1;
  c[p[0]] = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (s[p[i]] != s[p[i - 1]]) ++classes;
    c[p[i]] = classes - 1;
  }

  for (std::size_t h = 1; h < n && classes < n; h <<= 1) {
    for (std::size_t i = 0; i < n; ++i)
      pn[i] = static_cast<std::uint32_t>(p[i] >= h ? p[i] - h : p[i] + n - h);
    std::fill(cnt.begin(), cnt.begin() + classes, 0);
    for (std::size_t i = 0; i < n; ++i) ++cnt[c[pn[i]]];
    for (std::size_t v = 1; v < classes; ++v) cnt[v] += cnt[v - 1];
    for (std::size_t i = n; i-- > 0;) p[--cnt[c[pn[i]]]] = pn[i];

    auto second = [&](std::uint32_t r) { return c[r + h < n ? r + h : r + h - n]; };
    cn[p[0]] = 0;
    classes = 1;
    for (std::size_t i = 1; i < n; ++i) {
      if (c[p[i]] != c[p[i - 1]] || second(p[i]) != second(p[i - 1])) ++classes;
      cn[p[i]] = classes - 1;
    }
    c.swap(cn);
  }

  // Classes now identify whole rotations. A stable pass over the start
  // offsets orders identical rotations by offset.
  std::fill(cnt.begin(), cnt.begin() + classes, 0);
  for (std::size_t i = 0; i < n; ++i) ++cnt[c[i]];
  std::uint32_t start = 0;
  for (std::size_t v = 0; v < classes; ++v) {
    std::uint32_t count = cnt[v];
    cnt[v] = start;
    start += count;
  }
  for (std::size_t i = 0; i < n; ++i) p[cnt[c[i]]++] = static_cast<std::uint32_t>(i);

  BwtBlock out;
  out.last_column.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t r = p[i];
    out.last_column[i] = s[r == 0 ? n - 1 : r - 1];
    if (r == 0) out.primary_index = static_cast<std::uint32_t>(i);
  }
  return out;
}

Bytes bwt_inverse(const BwtBlock& block) {
  const Bytes& last = block.last_column;
  const std::size_t n = last.size();
  if (block.primary_index >= n)
    throw Error(ErrorCode::CorruptStream,
                "BWT primary index " + std::to_string(block.primary_index) +
                    " out of range for block of " + std::to_string(n) + " bytes");

  std::array<std::uint32_t, 256> first{};
  for (std::uint8_t b : last) ++first[b];
  std::uint32_t sum = 0;
  for (auto& f : first) {
    std::uint32_t count = f;
    f = sum;
    sum += count;
  }
  std::vector<std::uint32_t> lf(n);
  for (std::size_t i = 0; i < n; ++i) lf[i] = first[last[i]]++;

  Bytes out(n);
  std::uint32_t row = block.primary_index;
  for (std::size_t k = n; k-- > 0;) {
    out[k] = last[row];
    row = lf[row];
  }
  return out;
}

Bytes mtf_encode(ByteView data) {
  std::array<std::uint8_t, 256> order;
  for (std::size_t i = 0; i < 256; ++i) order[i] = static_cast<std::uint8_t>(i);
  Bytes out;
  out.reserve(data.size());
  for (std::uint8_t b : data) {
    std::size_t idx = 0;
    while (order[idx] != b) ++idx;
    out.push_back(static_cast<std::uint8_t>(idx));
    std::copy_backward(order.begin(), order.begin() + idx, order.begin() + idx + 1);
    order[0] = b;
  }
  return out;
}

Bytes mtf_decode(ByteView data) {
  std::array<std::uint8_t, 256> order;
  for (std::size_t i = 0; i < 256; ++i) order[i] = static_cast<std::uint8_t>(i);
  Bytes out;
  out.reserve(data.size());
  for (std::uint8_t idx : data) {
    std::uint8_t b = order[idx];
    out.push_back(b);
    std::copy_backward(order.begin(), order.begin() + idx, order.begin() + idx + 1);
    order[0] = b;
  }
  return out;
}

Bytes rle_encode(ByteView data) {
  Bytes out;
  out.reserve(data.size() + data.size() / 16);
  std::size_t i = 0;
  while (i < data.size()) {
    std::uint8_t b = data[i];
    std::size_t run = 1;
    while (i + run < data.size() && data[i + run] == b && run < kRleThreshold + kRleMaxExtra)
      ++run;
    if (run < kRleThreshold) {
      out.insert(out.end(), run, b);
    } else {
      out.insert(out.end(), kRleThreshold, b);
      out.push_back(static_cast<std::uint8_t>(run - kRleThreshold));
    }
    i += run;
  }
  return out;
}

Bytes rle_decode(ByteView data) {
  Bytes out;
  out.reserve(data.size() + data.size() / 4);
  std::size_t run = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    std::uint8_t b = data[i];
    run = (run > 0 && out.back() == b) ? run + 1 : 1;
    out.push_back(b);
    if (run == kRleThreshold) {
      if (i + 1 >= data.size())
        throw Error(ErrorCode::CorruptStream,
                    "RLE stream truncated: missing run count at byte " + std::to_string(i + 1));
      out.insert(out.end(), data[++i], b);
      run = 0;
    }
  }
  return out;
}

}  // namespace idbe
