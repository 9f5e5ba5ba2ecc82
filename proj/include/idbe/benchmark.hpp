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

#ifndef IDBE_BENCHMARK_HPP
#define IDBE_BENCHMARK_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "idbe/pipeline.hpp"

namespace idbe {

struct BenchRow {
  std::string file_name;
  Transform transform = Transform::None;
  std::uint64_t input_bytes = 0;
  std::uint64_t output_bytes = 0;
  double bpc = 0.0;
  double compress_seconds = 0.0;
  double decompress_seconds = 0.0;
  bool roundtrip_ok = false;
};

// Self-trained when `external_dictionary` is empty: the dictionary is built
// from every readable file in the corpus directory.
struct DictionaryMode {
  std::optional<std::filesystem::path> external_dictionary;

  static DictionaryMode self_trained() { return {}; }
  static DictionaryMode external(std::filesystem::path p) { return {std::move(p)}; }
};

struct BenchReport {
  std::vector<BenchRow> rows;  // sorted by file name, then transform order given
  std::vector<std::string> diagnostics;
};

// Compresses, decompresses and verifies one buffer. Containers reference the
// dictionary externally, so its size is not charged to the file. Throws
// CorruptStream if the round trip does not reproduce the input.
BenchRow bench_buffer(const std::string& name, ByteView data, Transform transform,
                      const Dictionary* dict, std::uint32_t block_size = kDefaultBlockSize);

// Flat directory of files. Unreadable or empty files are skipped with a
// diagnostic; a round-trip failure aborts the run.
BenchReport run_corpus(const std::filesystem::path& dir, const std::vector<Transform>& transforms,
                       const DictionaryMode& mode, std::uint32_t block_size = kDefaultBlockSize);

std::string emit_csv(const std::vector<BenchRow>& rows);

// gnuplot data: one dataset per transform, separated by two blank lines so
// `index N` selects a transform.
std::string emit_plot_data(const std::vector<BenchRow>& rows);

}  // namespace idbe

#endif  // IDBE_BENCHMARK_HPP
