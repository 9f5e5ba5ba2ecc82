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

#include "idbe/common.hpp"

namespace idbe {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Io: return "io";
    case ErrorCode::CorruptStream: return "corrupt-stream";
    case ErrorCode::MalformedHeader: return "malformed-header";
    case ErrorCode::UnsupportedVersion: return "unsupported-version";
    case ErrorCode::DuplicateWord: return "duplicate-word";
    case ErrorCode::IllegalWordByte: return "illegal-word-byte";
    case ErrorCode::DictionaryOverflow: return "dictionary-overflow";
    case ErrorCode::DictionaryMissing: return "dictionary-missing";
    case ErrorCode::AuthenticationFailure: return "authentication-failure";
    case ErrorCode::SequenceGap: return "sequence-gap";
  }
  return "unknown";
}

}  // namespace idbe
