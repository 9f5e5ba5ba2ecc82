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

#include "idbe/idbe.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "idbe/benchmark.hpp"
#include "idbe/dictionary.hpp"
#include "idbe/pipeline.hpp"
#include "idbe/secure_transfer.hpp"

struct idbe_dictionary {
  idbe::Dictionary dict;
};

struct idbe_bench_report {
  idbe::BenchReport report;
};

namespace {

thread_local std::string g_last_error;

idbe_status status_for(idbe::ErrorCode code) {
  using idbe::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return IDBE_ERR_INVALID_ARGUMENT;
    case ErrorCode::Io: return IDBE_ERR_IO;
    case ErrorCode::CorruptStream:
    case ErrorCode::MalformedHeader:
    case ErrorCode::UnsupportedVersion: return IDBE_ERR_CORRUPT;
    case ErrorCode::DuplicateWord:
    case ErrorCode::IllegalWordByte:
    case ErrorCode::DictionaryOverflow: return IDBE_ERR_DICTIONARY_INVALID;
    case ErrorCode::DictionaryMissing: return IDBE_ERR_DICTIONARY_MISSING;
    case ErrorCode::AuthenticationFailure: return IDBE_ERR_AUTHENTICATION;
    case ErrorCode::SequenceGap: return IDBE_ERR_SEQUENCE_GAP;
  }
  return IDBE_ERR_INTERNAL;
}

idbe_status fail(idbe_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
idbe_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return IDBE_OK;
  } catch (const idbe::Error& e) {
    return fail(status_for(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(IDBE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(IDBE_ERR_INTERNAL, e.what());
  }
}

idbe_status emit(const void* data, size_t size, idbe_buffer* out) {
  out->data = nullptr;
  out->size = 0;
  if (size == 0) return IDBE_OK;
  auto* p = static_cast<uint8_t*>(std::malloc(size));
  if (p == nullptr) return fail(IDBE_ERR_INTERNAL, "out of memory");
  std::memcpy(p, data, size);
  out->data = p;
  out->size = size;
  return IDBE_OK;
}

idbe::ByteView view(const uint8_t* data, size_t size) {
  return {data, data == nullptr ? 0 : size};
}

#define IDBE_REQUIRE(cond, what) \
  if (!(cond)) return fail(IDBE_ERR_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

const char* idbe_version(void) { return "1.0.0"; }

const char* idbe_status_string(idbe_status status) {
  switch (status) {
    case IDBE_OK: return "ok";
    case IDBE_ERR_INVALID_ARGUMENT: return "invalid argument";
    case IDBE_ERR_IO: return "i/o error";
    case IDBE_ERR_CORRUPT: return "corrupt or malformed data";
    case IDBE_ERR_DICTIONARY_MISSING: return "dictionary missing";
    case IDBE_ERR_DICTIONARY_INVALID: return "invalid dictionary";
    case IDBE_ERR_AUTHENTICATION: return "authentication failure";
    case IDBE_ERR_SEQUENCE_GAP: return "record sequence gap";
    case IDBE_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* idbe_last_error(void) { return g_last_error.c_str(); }

void idbe_buffer_free(idbe_buffer* buffer) {
  if (buffer == nullptr) return;
  std::free(buffer->data);
  buffer->data = nullptr;
  buffer->size = 0;
}

idbe_status idbe_dictionary_train(const uint8_t* const* inputs, const size_t* sizes, size_t count,
                                  idbe_dictionary** out) {
  IDBE_REQUIRE(out != nullptr, "output handle is NULL");
  IDBE_REQUIRE(count == 0 || (inputs != nullptr && sizes != nullptr), "training inputs are NULL");
  *out = nullptr;
  return guarded([&] {
    std::vector<idbe::ByteView> training;
    training.reserve(count);
    for (size_t i = 0; i < count; ++i) training.push_back(view(inputs[i], sizes[i]));
    *out = new idbe_dictionary{idbe::build_dictionary(idbe::build_lexicon(training))};
  });
}

idbe_status idbe_dictionary_parse(const uint8_t* data, size_t size, idbe_dictionary** out) {
  IDBE_REQUIRE(out != nullptr, "output handle is NULL");
  *out = nullptr;
  return guarded([&] { *out = new idbe_dictionary{idbe::parse_dictionary(view(data, size))}; });
}

idbe_status idbe_dictionary_serialize(const idbe_dictionary* dict, idbe_buffer* out) {
  IDBE_REQUIRE(dict != nullptr && out != nullptr, "NULL argument");
  idbe_status st = IDBE_OK;
  idbe_status g = guarded([&] {
    auto bytes = idbe::serialize_dictionary(dict->dict);
    st = emit(bytes.data(), bytes.size(), out);
  });
  return g != IDBE_OK ? g : st;
}

size_t idbe_dictionary_size(const idbe_dictionary* dict) {
  return dict == nullptr ? 0 : dict->dict.size();
}

void idbe_dictionary_free(idbe_dictionary* dict) { delete dict; }

void idbe_compress_options_init(idbe_compress_options* options) {
  if (options == nullptr) return;
  options->transform = IDBE_TRANSFORM_NONE;
  options->block_size = idbe::kDefaultBlockSize;
  options->embed_dictionary = 0;
}

idbe_status idbe_compress(const uint8_t* input, size_t size, const idbe_compress_options* options,
                          const idbe_dictionary* dict, idbe_buffer* out) {
  IDBE_REQUIRE(options != nullptr && out != nullptr, "NULL argument");
  IDBE_REQUIRE(input != nullptr || size == 0, "input is NULL");
  IDBE_REQUIRE(options->transform >= IDBE_TRANSFORM_NONE && options->transform <= IDBE_TRANSFORM_IDBE,
               "unknown transform");
  idbe_status st = IDBE_OK;
  idbe_status g = guarded([&] {
    idbe::PipelineConfig cfg;
    cfg.transform = static_cast<idbe::Transform>(options->transform);
    cfg.block_size = options->block_size;
    if (cfg.transform == idbe::Transform::None)
      cfg.dictionary_source = idbe::DictionarySource::NotNeeded;
    else
      cfg.dictionary_source = options->embed_dictionary ? idbe::DictionarySource::Embedded
                                                        : idbe::DictionarySource::External;
    auto bytes = idbe::compress(view(input, size), cfg, dict ? &dict->dict : nullptr);
    st = emit(bytes.data(), bytes.size(), out);
  });
  return g != IDBE_OK ? g : st;
}

idbe_status idbe_decompress(const uint8_t* container, size_t size, const idbe_dictionary* dict,
                            idbe_buffer* out) {
  IDBE_REQUIRE(out != nullptr, "NULL argument");
  IDBE_REQUIRE(container != nullptr || size == 0, "container is NULL");
  idbe_status st = IDBE_OK;
  idbe_status g = guarded([&] {
    auto bytes = idbe::decompress(view(container, size), dict ? &dict->dict : nullptr);
    st = emit(bytes.data(), bytes.size(), out);
  });
  return g != IDBE_OK ? g : st;
}

idbe_status idbe_pack_dictionary(const idbe_dictionary* dict, const uint8_t* key, size_t key_size,
                                 idbe_buffer* out) {
  IDBE_REQUIRE(dict != nullptr && out != nullptr, "NULL argument");
  IDBE_REQUIRE(key != nullptr || key_size == 0, "key is NULL");
  idbe_status st = IDBE_OK;
  idbe_status g = guarded([&] {
    idbe::SessionKey k(idbe::Bytes(key, key + key_size));
    auto bytes = idbe::pack_dictionary(dict->dict, k);
    st = emit(bytes.data(), bytes.size(), out);
  });
  return g != IDBE_OK ? g : st;
}

idbe_status idbe_unpack_dictionary(const uint8_t* records, size_t size, const uint8_t* key,
                                   size_t key_size, idbe_dictionary** out) {
  IDBE_REQUIRE(out != nullptr, "output handle is NULL");
  IDBE_REQUIRE(key != nullptr || key_size == 0, "key is NULL");
  *out = nullptr;
  return guarded([&] {
    idbe::SessionKey k(idbe::Bytes(key, key + key_size));
    *out = new idbe_dictionary{idbe::unpack_dictionary(view(records, size), k)};
  });
}

idbe_status idbe_bench_run(const char* corpus_dir, const idbe_transform* transforms,
                           size_t transform_count, const char* dictionary_path,
                           idbe_bench_report** out) {
  IDBE_REQUIRE(out != nullptr && corpus_dir != nullptr, "NULL argument");
  IDBE_REQUIRE(transform_count > 0 && transforms != nullptr, "no transforms given");
  *out = nullptr;
  std::vector<idbe::Transform> ts;
  for (size_t i = 0; i < transform_count; ++i) {
    IDBE_REQUIRE(transforms[i] >= IDBE_TRANSFORM_NONE && transforms[i] <= IDBE_TRANSFORM_IDBE,
                 "unknown transform");
    ts.push_back(static_cast<idbe::Transform>(transforms[i]));
  }
  return guarded([&] {
    auto mode = dictionary_path ? idbe::DictionaryMode::external(dictionary_path)
                                : idbe::DictionaryMode::self_trained();
    *out = new idbe_bench_report{idbe::run_corpus(corpus_dir, ts, mode)};
  });
}

size_t idbe_bench_row_count(const idbe_bench_report* report) {
  return report == nullptr ? 0 : report->report.rows.size();
}

idbe_status idbe_bench_row_get(const idbe_bench_report* report, size_t index, idbe_bench_row* out) {
  IDBE_REQUIRE(report != nullptr && out != nullptr, "NULL argument");
  IDBE_REQUIRE(index < report->report.rows.size(), "row index out of range");
  const auto& r = report->report.rows[index];
  out->file_name = r.file_name.c_str();
  out->transform = static_cast<idbe_transform>(r.transform);
  out->input_bytes = r.input_bytes;
  out->output_bytes = r.output_bytes;
  out->bpc = r.bpc;
  out->compress_seconds = r.compress_seconds;
  out->decompress_seconds = r.decompress_seconds;
  out->roundtrip_ok = r.roundtrip_ok ? 1 : 0;
  return IDBE_OK;
}

size_t idbe_bench_diagnostic_count(const idbe_bench_report* report) {
  return report == nullptr ? 0 : report->report.diagnostics.size();
}

const char* idbe_bench_diagnostic(const idbe_bench_report* report, size_t index) {
  if (report == nullptr || index >= report->report.diagnostics.size()) return nullptr;
  return report->report.diagnostics[index].c_str();
}

idbe_status idbe_bench_csv(const idbe_bench_report* report, idbe_buffer* out) {
  IDBE_REQUIRE(report != nullptr && out != nullptr, "NULL argument");
  idbe_status st = IDBE_OK;
  idbe_status g = guarded([&] {
    auto text = idbe::emit_csv(report->report.rows);
    st = emit(text.data(), text.size(), out);
  });
  return g != IDBE_OK ? g : st;
}

idbe_status idbe_bench_plot_data(const idbe_bench_report* report, idbe_buffer* out) {
  IDBE_REQUIRE(report != nullptr && out != nullptr, "NULL argument");
  idbe_status st = IDBE_OK;
  idbe_status g = guarded([&] {
    auto text = idbe::emit_plot_data(report->report.rows);
    st = emit(text.data(), text.size(), out);
  });
  return g != IDBE_OK ? g : st;
}

void idbe_bench_free(idbe_bench_report* report) { delete report; }

}  // extern "C"
