/*
   Copyright 2026 The gradex Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GRADEX_GRADEX_H
#define GRADEX_GRADEX_H

#include <stddef.h>

#if defined(_WIN32)
#define GRADEX_API __declspec(dllexport)
#else
#define GRADEX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gradex_status {
  GRADEX_OK = 0,
  GRADEX_ERR_PARSE = 1,    /* malformed input document */
  GRADEX_ERR_USAGE = 2,    /* malformed request */
  GRADEX_ERR_COMPUTE = 3,  /* the engine rejected the computation */
  GRADEX_VERIFY_FAILED = 4,  /* verify ran; at least one check failed. Output is still set. */
  GRADEX_ERR_INTERNAL = 5
} gradex_status;

typedef struct gradex_document gradex_document;

GRADEX_API const char* gradex_version(void);

/* Parses a JSON input document of `length` bytes. On success *out owns a
   document to be released with gradex_document_free. */
GRADEX_API gradex_status gradex_document_parse(const char* text, size_t length, gradex_document** out);
GRADEX_API void gradex_document_free(gradex_document* doc);

/* Canonical text of the document; release with gradex_string_free. */
GRADEX_API gradex_status gradex_document_print(const gradex_document* doc, char** out);

/* Runs one request, a JSON object such as
     {"command": "reg", "M": "M", "json": false}
   doc may be NULL for "verify". *out receives the rendered output. */
GRADEX_API gradex_status gradex_run(const gradex_document* doc, const char* request, char** out);

GRADEX_API void gradex_string_free(char* s);

/* Message of the last failing call on this thread, "" if none. For parse
   errors line and column are 1-based, 0 when unknown. */
GRADEX_API const char* gradex_last_error(void);
GRADEX_API size_t gradex_last_error_line(void);
GRADEX_API size_t gradex_last_error_column(void);

#ifdef __cplusplus
}
#endif

#endif
