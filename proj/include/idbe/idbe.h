/*
 * Copyright 2026 The IDBE Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libidbe: dictionary training, the BWT container
 * compressor with none/star/IDBE front ends, authenticated dictionary
 * transfer records and the corpus benchmark.
 *
 * Conventions:
 *  - Every fallible call returns idbe_status. On failure a one-line message
 *    is available from idbe_last_error() on the same thread.
 *  - Output buffers are allocated by the library and released with
 *    idbe_buffer_free(). Handles are released with their *_free function;
 *    passing NULL to any *_free function is a no-op.
 *  - Dictionary handles are immutable and may be shared between threads.
 */

#ifndef IDBE_H
#define IDBE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(IDBE_BUILDING_LIBRARY)
#    define IDBE_API __declspec(dllexport)
#  else
#    define IDBE_API __declspec(dllimport)
#  endif
#else
#  define IDBE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum idbe_status {
  IDBE_OK = 0,
  IDBE_ERR_INVALID_ARGUMENT = 1,
  IDBE_ERR_IO = 2,
  IDBE_ERR_CORRUPT = 3,            /* corrupt stream, bad header or version */
  IDBE_ERR_DICTIONARY_MISSING = 4,
  IDBE_ERR_DICTIONARY_INVALID = 5, /* duplicate word, illegal byte, overflow */
  IDBE_ERR_AUTHENTICATION = 6,
  IDBE_ERR_SEQUENCE_GAP = 7,
  IDBE_ERR_INTERNAL = 8
} idbe_status;

typedef enum idbe_transform {
  IDBE_TRANSFORM_NONE = 0,
  IDBE_TRANSFORM_STAR = 1,
  IDBE_TRANSFORM_IDBE = 2
} idbe_transform;

typedef struct idbe_buffer {
  uint8_t* data;
  size_t size;
} idbe_buffer;

typedef struct idbe_dictionary idbe_dictionary;
typedef struct idbe_bench_report idbe_bench_report;

IDBE_API const char* idbe_version(void);
IDBE_API const char* idbe_status_string(idbe_status status);
IDBE_API const char* idbe_last_error(void);
IDBE_API void idbe_buffer_free(idbe_buffer* buffer);

/* ---- dictionary ------------------------------------------------------- */

/* Frequency-ranks the words of `count` training buffers. */
IDBE_API idbe_status idbe_dictionary_train(const uint8_t* const* inputs, const size_t* sizes,
                                           size_t count, idbe_dictionary** out);
IDBE_API idbe_status idbe_dictionary_parse(const uint8_t* data, size_t size,
                                           idbe_dictionary** out);
IDBE_API idbe_status idbe_dictionary_serialize(const idbe_dictionary* dict, idbe_buffer* out);
IDBE_API size_t idbe_dictionary_size(const idbe_dictionary* dict);
IDBE_API void idbe_dictionary_free(idbe_dictionary* dict);

/* ---- container -------------------------------------------------------- */

typedef struct idbe_compress_options {
  idbe_transform transform;
  uint32_t block_size;     /* 1 KiB .. 16 MiB */
  int embed_dictionary;    /* nonzero: store the dictionary in the container */
} idbe_compress_options;

/* transform NONE, default block size, external dictionary. */
IDBE_API void idbe_compress_options_init(idbe_compress_options* options);

/* `dict` is required unless the transform is NONE. */
IDBE_API idbe_status idbe_compress(const uint8_t* input, size_t size,
                                   const idbe_compress_options* options,
                                   const idbe_dictionary* dict, idbe_buffer* out);
/* `dict` may be NULL; it is needed only for containers that reference an
 * external dictionary (IDBE_ERR_DICTIONARY_MISSING otherwise). */
IDBE_API idbe_status idbe_decompress(const uint8_t* container, size_t size,
                                     const idbe_dictionary* dict, idbe_buffer* out);

/* ---- dictionary transfer records -------------------------------------- */

/* Keys must be at least 16 bytes. */
IDBE_API idbe_status idbe_pack_dictionary(const idbe_dictionary* dict, const uint8_t* key,
                                          size_t key_size, idbe_buffer* out);
IDBE_API idbe_status idbe_unpack_dictionary(const uint8_t* records, size_t size,
                                            const uint8_t* key, size_t key_size,
                                            idbe_dictionary** out);

/* ---- benchmark -------------------------------------------------------- */

typedef struct idbe_bench_row {
  const char* file_name; /* owned by the report */
  idbe_transform transform;
  uint64_t input_bytes;
  uint64_t output_bytes;
  double bpc;
  double compress_seconds;
  double decompress_seconds;
  int roundtrip_ok;
} idbe_bench_row;

/* `dictionary_path` NULL trains a dictionary on the corpus itself. */
IDBE_API idbe_status idbe_bench_run(const char* corpus_dir, const idbe_transform* transforms,
                                    size_t transform_count, const char* dictionary_path,
                                    idbe_bench_report** out);
IDBE_API size_t idbe_bench_row_count(const idbe_bench_report* report);
IDBE_API idbe_status idbe_bench_row_get(const idbe_bench_report* report, size_t index,
                                        idbe_bench_row* out);
IDBE_API size_t idbe_bench_diagnostic_count(const idbe_bench_report* report);
IDBE_API const char* idbe_bench_diagnostic(const idbe_bench_report* report, size_t index);
IDBE_API idbe_status idbe_bench_csv(const idbe_bench_report* report, idbe_buffer* out);
IDBE_API idbe_status idbe_bench_plot_data(const idbe_bench_report* report, idbe_buffer* out);
IDBE_API void idbe_bench_free(idbe_bench_report* report);

#ifdef __cplusplus
}
#endif

#endif /* IDBE_H */
