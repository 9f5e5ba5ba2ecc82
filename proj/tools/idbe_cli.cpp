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

// idbe: command-line front end over libidbe.
//
// Exit codes: 0 success, 1 usage, 2 I/O, 3 format/corruption,
// 4 authentication.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "idbe/idbe.h"

namespace fs = std::filesystem;

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kFormat = 3, kAuth = 4 };

// Carries a diagnostic and the exit code up to main().
struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(idbe_status st) {
  switch (st) {
    case IDBE_OK: return kOk;
    case IDBE_ERR_INVALID_ARGUMENT: return kUsage;
    case IDBE_ERR_IO:
    case IDBE_ERR_INTERNAL: return kIo;
    case IDBE_ERR_AUTHENTICATION: return kAuth;
    case IDBE_ERR_CORRUPT:
    case IDBE_ERR_DICTIONARY_MISSING:
    case IDBE_ERR_DICTIONARY_INVALID:
    case IDBE_ERR_SEQUENCE_GAP: return kFormat;
  }
  return kFormat;
}

void check(idbe_status st, const std::string& context) {
  if (st != IDBE_OK)
    throw Failure{exit_code_for(st), context + ": " + idbe_status_string(st) + ": " + idbe_last_error()};
}

struct BufferGuard {
  idbe_buffer buf{nullptr, 0};
  ~BufferGuard() { idbe_buffer_free(&buf); }
};

struct DictDeleter {
  void operator()(idbe_dictionary* d) const { idbe_dictionary_free(d); }
};
using DictPtr = std::unique_ptr<idbe_dictionary, DictDeleter>;

struct ReportDeleter {
  void operator()(idbe_bench_report* r) const { idbe_bench_free(r); }
};
using ReportPtr = std::unique_ptr<idbe_bench_report, ReportDeleter>;

std::vector<uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kIo, "cannot open '" + path + "' for reading"};
  std::vector<uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Failure{kIo, "error reading '" + path + "'"};
  return data;
}

// Writes to a sibling temporary and renames, so a failed command never
// leaves a partial output file behind.
void write_file_atomic(const std::string& path, const void* data, size_t size) {
  std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Failure{kIo, "cannot open '" + tmp + "' for writing"};
    if (size > 0) out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Failure{kIo, "error writing '" + tmp + "'"};
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Failure{kIo, "cannot rename output into place at '" + path + "'"};
  }
}

void write_file_atomic(const std::string& path, const idbe_buffer& buf) {
  write_file_atomic(path, buf.data, buf.size);
}

DictPtr load_dictionary(const std::string& path) {
  auto bytes = read_file(path);
  idbe_dictionary* d = nullptr;
  check(idbe_dictionary_parse(bytes.data(), bytes.size(), &d), "dictionary '" + path + "'");
  return DictPtr(d);
}

std::vector<uint8_t> parse_hex_key(const std::string& hex) {
  if (hex.empty() || hex.size() % 2 != 0)
    throw Failure{kUsage, "key must be an even number of hex digits"};
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  std::vector<uint8_t> key;
  for (size_t i = 0; i < hex.size(); i += 2) {
    int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) throw Failure{kUsage, "key contains a non-hex character"};
    key.push_back(static_cast<uint8_t>(hi * 16 + lo));
  }
  return key;
}

// --key wins over IDBE_KEY.
std::vector<uint8_t> resolve_key(const std::string& flag) {
  if (!flag.empty()) return parse_hex_key(flag);
  if (const char* env = std::getenv("IDBE_KEY"); env != nullptr && *env != '\0')
    return parse_hex_key(env);
  throw Failure{kUsage, "no key given: pass --key HEX or set IDBE_KEY"};
}

std::optional<idbe_transform> transform_from(const std::string& name) {
  if (name == "none") return IDBE_TRANSFORM_NONE;
  if (name == "star") return IDBE_TRANSFORM_STAR;
  if (name == "idbe") return IDBE_TRANSFORM_IDBE;
  return std::nullopt;
}

const char* transform_label(idbe_transform t) {
  switch (t) {
    case IDBE_TRANSFORM_NONE: return "none";
    case IDBE_TRANSFORM_STAR: return "star";
    case IDBE_TRANSFORM_IDBE: return "idbe";
  }
  return "?";
}

// ---- subcommands --------------------------------------------------------

struct MakeDictArgs {
  std::string output;
  std::vector<std::string> inputs;
};

void run_makedict(const MakeDictArgs& a) {
  std::vector<std::vector<uint8_t>> files;
  for (const auto& p : a.inputs) files.push_back(read_file(p));
  std::vector<const uint8_t*> ptrs;
  std::vector<size_t> sizes;
  for (const auto& f : files) {
    ptrs.push_back(f.data());
    sizes.push_back(f.size());
  }
  idbe_dictionary* d = nullptr;
  check(idbe_dictionary_train(ptrs.data(), sizes.data(), files.size(), &d), "makedict");
  DictPtr dict(d);
  BufferGuard out;
  check(idbe_dictionary_serialize(dict.get(), &out.buf), "makedict");
  write_file_atomic(a.output, out.buf);
  std::cerr << "makedict: " << idbe_dictionary_size(dict.get()) << " words from "
            << a.inputs.size() << " file(s)\n";
}

struct CompressArgs {
  std::string transform = "none";
  std::string dict;
  bool embed = false;
  uint32_t block_size = 921600;
  std::string output;
  std::string input;
};

void run_compress(const CompressArgs& a) {
  auto transform = transform_from(a.transform);
  if (!transform) throw Failure{kUsage, "unknown transform '" + a.transform + "'"};
  auto input = read_file(a.input);

  DictPtr dict;
  if (*transform != IDBE_TRANSFORM_NONE) {
    if (!a.dict.empty()) {
      dict = load_dictionary(a.dict);
    } else if (a.embed) {
      // Self-contained: train on the input itself.
      const uint8_t* ptr = input.data();
      size_t size = input.size();
      idbe_dictionary* d = nullptr;
      check(idbe_dictionary_train(&ptr, &size, 1, &d), "compress");
      dict.reset(d);
    } else {
      throw Failure{kUsage, "transform '" + a.transform + "' needs --dict DICT or --embed-dict"};
    }
  }

  idbe_compress_options opts;
  idbe_compress_options_init(&opts);
  opts.transform = *transform;
  opts.block_size = a.block_size;
  opts.embed_dictionary = a.embed ? 1 : 0;
  BufferGuard out;
  check(idbe_compress(input.data(), input.size(), &opts, dict.get(), &out.buf), "compress");
  write_file_atomic(a.output, out.buf);
}

struct DecompressArgs {
  std::string dict;
  std::string output;
  std::string input;
};

void run_decompress(const DecompressArgs& a) {
  auto input = read_file(a.input);
  DictPtr dict;
  if (!a.dict.empty()) dict = load_dictionary(a.dict);
  BufferGuard out;
  check(idbe_decompress(input.data(), input.size(), dict.get(), &out.buf), "decompress");
  write_file_atomic(a.output, out.buf);
}

struct KeyedArgs {
  std::string key;
  std::string output;
  std::string input;
};

void run_pack(const KeyedArgs& a) {
  auto key = resolve_key(a.key);
  DictPtr dict = load_dictionary(a.input);
  BufferGuard out;
  check(idbe_pack_dictionary(dict.get(), key.data(), key.size(), &out.buf), "pack-dict");
  write_file_atomic(a.output, out.buf);
}

void run_unpack(const KeyedArgs& a) {
  auto key = resolve_key(a.key);
  auto records = read_file(a.input);
  idbe_dictionary* d = nullptr;
  check(idbe_unpack_dictionary(records.data(), records.size(), key.data(), key.size(), &d),
        "unpack-dict");
  DictPtr dict(d);
  BufferGuard out;
  check(idbe_dictionary_serialize(dict.get(), &out.buf), "unpack-dict");
  write_file_atomic(a.output, out.buf);
}

struct BenchArgs {
  std::string corpus;
  std::string transforms = "none,star,idbe";
  std::string dict;
  std::string csv;
  std::string plot;
};

void run_bench(const BenchArgs& a) {
  std::vector<idbe_transform> ts;
  std::stringstream list(a.transforms);
  for (std::string item; std::getline(list, item, ',');) {
    auto t = transform_from(item);
    if (!t) throw Failure{kUsage, "unknown transform '" + item + "' in --transforms"};
    ts.push_back(*t);
  }
  if (ts.empty()) throw Failure{kUsage, "--transforms is empty"};
  if (!fs::is_directory(a.corpus)) throw Failure{kIo, "corpus '" + a.corpus + "' is not a directory"};

  idbe_bench_report* r = nullptr;
  check(idbe_bench_run(a.corpus.c_str(), ts.data(), ts.size(), a.dict.empty() ? nullptr : a.dict.c_str(), &r),
        "bench");
  ReportPtr report(r);
  for (size_t i = 0; i < idbe_bench_diagnostic_count(report.get()); ++i)
    std::cerr << "bench: " << idbe_bench_diagnostic(report.get(), i) << '\n';

  BufferGuard csv;
  check(idbe_bench_csv(report.get(), &csv.buf), "bench");
  write_file_atomic(a.csv, csv.buf);
  if (!a.plot.empty()) {
    BufferGuard plot;
    check(idbe_bench_plot_data(report.get(), &plot.buf), "bench");
    write_file_atomic(a.plot, plot.buf);
  }

  std::printf("%-20s %-6s %12s %12s %8s\n", "file", "xform", "input", "output", "bpc");
  for (size_t i = 0; i < idbe_bench_row_count(report.get()); ++i) {
    idbe_bench_row row;
    check(idbe_bench_row_get(report.get(), i, &row), "bench");
    std::printf("%-20s %-6s %12llu %12llu %8.3f\n", row.file_name, transform_label(row.transform),
                static_cast<unsigned long long>(row.input_bytes),
                static_cast<unsigned long long>(row.output_bytes), row.bpc);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"IDBE text compression toolkit: dictionary transforms over a BWT backend"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(idbe_version()));

  MakeDictArgs md;
  auto* makedict = app.add_subcommand("makedict", "Build a frequency-ranked dictionary from training files");
  makedict->add_option("-o,--output", md.output, "Dictionary file to write")->required();
  makedict->add_option("files", md.inputs, "Training files")->required();

  CompressArgs ca;
  auto* compress = app.add_subcommand("compress", "Compress a file into a BWT1 container");
  compress->add_option("--transform", ca.transform, "Front-end transform")
      ->check(CLI::IsMember({"none", "star", "idbe"}))
      ->capture_default_str();
  compress->add_option("--dict", ca.dict, "Dictionary file (referenced, or embedded with --embed-dict)");
  compress->add_flag("--embed-dict", ca.embed,
                     "Store the dictionary in the container; without --dict, train it on the input");
  compress->add_option("--block-size", ca.block_size, "BWT block size in bytes (1024..16777216)")
      ->check(CLI::Range(1024u, 16u << 20))
      ->capture_default_str();
  compress->add_option("-o,--output", ca.output, "Container file to write")->required();
  compress->add_option("input", ca.input, "File to compress")->required();

  DecompressArgs da;
  auto* decompress = app.add_subcommand("decompress", "Restore a file from a BWT1 container");
  decompress->add_option("--dict", da.dict, "Dictionary for containers that reference one externally");
  decompress->add_option("-o,--output", da.output, "File to write")->required();
  decompress->add_option("input", da.input, "Container file")->required();

  KeyedArgs pa;
  auto* pack = app.add_subcommand("pack-dict", "Fragment, authenticate and encrypt a dictionary for transfer");
  pack->add_option("--key", pa.key, "Session key as hex (>= 16 bytes); falls back to IDBE_KEY");
  pack->add_option("-o,--output", pa.output, "Record file to write")->required();
  pack->add_option("dict", pa.input, "Dictionary file")->required();

  KeyedArgs ua;
  auto* unpack = app.add_subcommand("unpack-dict", "Verify and reassemble a transferred dictionary");
  unpack->add_option("--key", ua.key, "Session key as hex (>= 16 bytes); falls back to IDBE_KEY");
  unpack->add_option("-o,--output", ua.output, "Dictionary file to write")->required();
  unpack->add_option("input", ua.input, "Record file")->required();

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Measure bits per character and time over a corpus directory");
  bench->add_option("--corpus", ba.corpus, "Directory of corpus files")->required();
  bench->add_option("--transforms", ba.transforms, "Comma-separated list of none,star,idbe")
      ->capture_default_str();
  bench->add_option("--dict", ba.dict, "Use this dictionary instead of training on the corpus");
  bench->add_option("--csv", ba.csv, "CSV report to write")->required();
  bench->add_option("--plot", ba.plot, "gnuplot data file to write");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*makedict) run_makedict(md);
    else if (*compress) run_compress(ca);
    else if (*decompress) run_decompress(da);
    else if (*pack) run_pack(pa);
    else if (*unpack) run_unpack(ua);
    else if (*bench) run_bench(ba);
  } catch (const Failure& f) {
    std::cerr << "idbe: " << f.message << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "idbe: " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}
