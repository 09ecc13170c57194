/* Copyright 2026 The gradex Authors
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

/* Exercises the shared library through its C header only. */

#include <stdio.h>
#include <string.h>

#include "gradex/gradex.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond);  \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static const char* kDoc =
    "{\"ring\":{\"char\":32003,\"vars\":[\"x\",\"y\"]},\n"
    " \"modules\":{\"M\":{\"ideal\":[\"x^2\",\"x*y\",\"y^2\"]},\"K\":{\"ideal\":[\"x\",\"y\"]}}}";

int main(void) {
  gradex_document* doc = NULL;
  char* out = NULL;

  EXPECT(strcmp(gradex_version(), "0.1.0") == 0);

  EXPECT(gradex_document_parse(kDoc, strlen(kDoc), &doc) == GRADEX_OK);
  EXPECT(doc != NULL);

  EXPECT(gradex_run(doc, "{\"command\":\"reg\",\"M\":\"M\"}", &out) == GRADEX_OK);
  EXPECT(out && strcmp(out, "reg = 1\n") == 0);
  gradex_string_free(out);
  out = NULL;

  EXPECT(gradex_run(doc, "{\"command\":\"betti\",\"M\":\"K\"}", &out) == GRADEX_OK);
  EXPECT(out && strcmp(out, "       0 1 2\ntotal: 1 2 1\n    0: 1 2 1\n") == 0);
  gradex_string_free(out);
  out = NULL;

  EXPECT(gradex_run(doc, "{\"command\":\"reg\",\"M\":\"Q\"}", &out) != GRADEX_OK);
  EXPECT(strlen(gradex_last_error()) > 0);
  EXPECT(gradex_run(doc, "{\"command\":\"frobnicate\"}", &out) == GRADEX_ERR_USAGE);
  EXPECT(gradex_run(doc, "not json", &out) == GRADEX_ERR_USAGE);

  EXPECT(gradex_document_print(doc, &out) == GRADEX_OK);
  if (out) {
    gradex_document* again = NULL;
    EXPECT(gradex_document_parse(out, strlen(out), &again) == GRADEX_OK);
    gradex_document_free(again);
    gradex_string_free(out);
    out = NULL;
  }
  gradex_document_free(doc);

  {
    const char* bad = "{\"ring\":{\"vars\":[\"x\",\"y\"]},\n \"modules\":{\"M\":{\"ideal\":[\"x*q\"]}}}";
    gradex_document* d = NULL;
    EXPECT(gradex_document_parse(bad, strlen(bad), &d) == GRADEX_ERR_PARSE);
    EXPECT(d == NULL);
    EXPECT(gradex_last_error_line() == 2);
    EXPECT(gradex_last_error_column() == 30);
  }

  EXPECT(gradex_run(NULL, "{\"command\":\"verify\",\"suite\":\"random\",\"seed\":7}", &out) == GRADEX_OK);
  EXPECT(out && strstr(out, " 0 fail,") != NULL);
  gradex_string_free(out);
  out = NULL;
  EXPECT(gradex_run(NULL, "{\"command\":\"reg\",\"M\":\"M\"}", &out) == GRADEX_ERR_USAGE);

  gradex_document_free(NULL);
  gradex_string_free(NULL);

  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("capi: ok\n");
  return 0;
}
