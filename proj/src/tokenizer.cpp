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

#include "idbe/tokenizer.hpp"

namespace idbe {

std::size_t letter_run(ByteView input, std::size_t pos) noexcept {
  std::size_t end = pos;
  while (end < input.size() && is_ascii_letter(input[end])) ++end;
  return end - pos;
}

std::vector<Token> tokenize(ByteView input) {
  std::vector<Token> tokens;
  tokens.reserve(input.size() / 4 + 1);
  for_each_token(input, [&](const Token& t) { tokens.push_back(t); });
  return tokens;
}

}  // namespace idbe
