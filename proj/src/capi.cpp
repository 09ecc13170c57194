// Copyright 2026 The gradex Authors
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
#include "gradex/gradex.h"

#include <cstring>
#include <new>
#include <string>

#include "gradex/commands.hpp"
#include "gradex/error.hpp"
#include "gradex/io.hpp"

struct gradex_document {
  gradex::InputDocument doc;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_line = 0;
thread_local std::size_t last_column = 0;

gradex_status fail(gradex_status s, const std::string& msg, std::size_t line = 0, std::size_t column = 0) {
  last_error = msg;
  last_line = line;
  last_column = column;
  return s;
}

char* copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
gradex_status guarded(F&& f) {
  fail(GRADEX_OK, "");
  try {
    return f();
  } catch (const gradex::ParseError& e) {
    return fail(GRADEX_ERR_PARSE, e.what(), e.line(), e.column());
  } catch (const gradex::UsageError& e) {
    return fail(GRADEX_ERR_USAGE, e.what());
  } catch (const gradex::Error& e) {
    return fail(GRADEX_ERR_COMPUTE, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(GRADEX_ERR_USAGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GRADEX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GRADEX_ERR_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* gradex_version(void) { return "0.1.0"; }

gradex_status gradex_document_parse(const char* text, size_t length, gradex_document** out) {
  return guarded([&] {
    if (!out || (!text && length)) return fail(GRADEX_ERR_USAGE, "null argument");
    *out = nullptr;
    auto doc = gradex::parse_input(std::string_view(text ? text : "", length));
    *out = new gradex_document{std::move(doc)};
    return GRADEX_OK;
  });
}

void gradex_document_free(gradex_document* doc) { delete doc; }

gradex_status gradex_document_print(const gradex_document* doc, char** out) {
  return guarded([&] {
    if (!doc || !out) return fail(GRADEX_ERR_USAGE, "null argument");
    *out = copy(gradex::print_document(doc->doc));
    return GRADEX_OK;
  });
}

gradex_status gradex_run(const gradex_document* doc, const char* request, char** out) {
  return guarded([&] {
    if (!request || !out) return fail(GRADEX_ERR_USAGE, "null argument");
    *out = nullptr;
    auto req = nlohmann::json::parse(request);
    auto res = gradex::run_command(doc ? &doc->doc : nullptr, req);
    *out = copy(res.output);
    return res.verify_failed ? fail(GRADEX_VERIFY_FAILED, "verification failed") : GRADEX_OK;
  });
}

void gradex_string_free(char* s) { std::free(s); }

const char* gradex_last_error(void) { return last_error.c_str(); }
size_t gradex_last_error_line(void) { return last_line; }
size_t gradex_last_error_column(void) { return last_column; }

}
