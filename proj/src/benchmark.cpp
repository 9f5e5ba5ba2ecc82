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

#include "idbe/benchmark.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iterator>

namespace idbe {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::optional<Bytes> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) return std::nullopt;
  return data;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

BenchRow bench_buffer(const std::string& name, ByteView data, Transform transform,
                      const Dictionary* dict, std::uint32_t block_size) {
  PipelineConfig cfg;
  cfg.transform = transform;
  cfg.block_size = block_size;
  cfg.dictionary_source =
      transform == Transform::None ? DictionarySource::NotNeeded : DictionarySource::External;

  BenchRow row;
  row.file_name = name;
  row.transform = transform;
  row.input_bytes = data.size();

  auto start = Clock::now();
  Bytes packed = compress(data, cfg, dict);
  row.compress_seconds = seconds_since(start);

  start = Clock::now();
  Bytes restored = decompress(packed, dict);
  row.decompress_seconds = seconds_since(start);

  row.output_bytes = packed.size();
  row.bpc = bpc(row.input_bytes, row.output_bytes);
  row.roundtrip_ok = std::equal(restored.begin(), restored.end(), data.begin(), data.end());
  if (!row.roundtrip_ok)
    throw Error(ErrorCode::CorruptStream, "round trip failed for '" + name + "' with transform " +
                                              transform_name(transform));
  return row;
}

BenchReport run_corpus(const std::filesystem::path& dir, const std::vector<Transform>& transforms,
                       const DictionaryMode& mode, std::uint32_t block_size) {
  std::error_code ec;
  std::filesystem::directory_iterator it(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot read corpus directory " + dir.string() + ": " + ec.message());

  BenchReport report;
  std::vector<std::pair<std::string, Bytes>> files;
  for (const auto& entry : it) {
    if (!entry.is_regular_file(ec)) continue;
    std::string name = entry.path().filename().string();
    auto data = read_file(entry.path());
    if (!data) {
      report.diagnostics.push_back("skipped " + name + ": unreadable");
      continue;
    }
    if (data->empty()) {
      report.diagnostics.push_back("skipped " + name + ": empty file");
      continue;
    }
    files.emplace_back(std::move(name), std::move(*data));
  }
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  Dictionary dict;
  if (mode.external_dictionary) {
    auto bytes = read_file(*mode.external_dictionary);
    if (!bytes)
      throw Error(ErrorCode::Io, "cannot read dictionary " + mode.external_dictionary->string());
    dict = parse_dictionary(*bytes);
  } else {
    std::vector<ByteView> training;
    training.reserve(files.size());
    for (const auto& f : files) training.emplace_back(f.second);
    dict = build_dictionary(build_lexicon(training));
  }

  for (const auto& [name, data] : files) {
    for (Transform t : transforms) report.rows.push_back(bench_buffer(name, data, t, &dict, block_size));
  }
  return report;
}

std::string emit_csv(const std::vector<BenchRow>& rows) {
  std::string out = "file,transform,input_bytes,output_bytes,bpc,compress_seconds,decompress_seconds\n";
  for (const auto& r : rows) {
    out += csv_field(r.file_name) + ',' + transform_name(r.transform) + ',' +
           std::to_string(r.input_bytes) + ',' + std::to_string(r.output_bytes) + ',' +
           fixed6(r.bpc) + ',' + fixed6(r.compress_seconds) + ',' + fixed6(r.decompress_seconds) +
           '\n';
  }
  return out;
}

std::string emit_plot_data(const std::vector<BenchRow>& rows) {
  std::string out =
      "# bits per character and conversion time per file\n"
      "# columns: file bpc compress_seconds decompress_seconds\n";
  bool first = true;
  for (Transform t : {Transform::None, Transform::Star, Transform::Idbe}) {
    bool any = std::any_of(rows.begin(), rows.end(), [&](const BenchRow& r) { return r.transform == t; });
    if (!any) continue;
    if (!first) out += "\n\n";
    first = false;
    out += std::string("# transform ") + transform_name(t) + '\n';
    for (const auto& r : rows) {
      if (r.transform != t) continue;
      out += '"' + r.file_name + "\" " + fixed6(r.bpc) + ' ' + fixed6(r.compress_seconds) + ' ' +
             fixed6(r.decompress_seconds) + '\n';
    }
  }
  return out;
}

}  // namespace idbe
