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
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gradex/extint.hpp"
#include "gradex/gradedmod.hpp"
#include "gradex/resolve.hpp"

namespace gradex {

/// One named module of an input document, kept in the form it was written.
struct ModuleDefinition {
  enum class Kind { Ideal, Cokernel };
  Kind kind = Kind::Ideal;
  std::vector<Polynomial> ideal;                  ///< R/I for Kind::Ideal
  std::vector<int> target_twists;                 ///< Kind::Cokernel
  std::vector<std::vector<Polynomial>> matrix;    ///< rows = generators
  Presentation presentation;                      ///< not minimalized
};

struct InputDocument {
  RingPtr ring;
  std::map<std::string, ModuleDefinition> modules;

  /// Throws ParseError(Schema) for unknown names.
  const Presentation& module(const std::string& name) const;
};

/// Parses the JSON input language:
///   {"ring": {"char": p, "vars": [...]},
///    "modules": {"M": {"ideal": [...]}, "N": {"target_twists": [...], "matrix": [[...]]}}}
/// Polynomials are strings in the polyring grammar. Errors carry the 1-based
/// line and column of the offending token.
InputDocument parse_input(std::string_view text);

/// Canonical text of a document; parse_input(print_document(d)) equals d.
std::string print_document(const InputDocument& doc);

bool operator==(const ModuleDefinition& a, const ModuleDefinition& b);
bool operator==(const InputDocument& a, const InputDocument& b);

/// Macaulay-style table: columns are homological degrees i, rows j - i,
/// zeros shown as '.'.
std::string render_betti(const BettiTable& table);

/// Integers as numbers, infinities as "+inf" / "-inf".
nlohmann::json to_json(const ExtInt& v);
nlohmann::json to_json(const BettiTable& table);
nlohmann::json to_json(const HilbertNumerator& h);
nlohmann::json to_json(const Presentation& P);

}  // namespace gradex
