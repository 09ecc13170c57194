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
#include "gradex/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gradex/error.hpp"

namespace gradex {

using nlohmann::json;

namespace {

struct Location {
  std::size_t line = 0;
  std::size_t column = 0;
};

Location locate(std::string_view text, std::size_t offset) {
  Location loc{1, 1};
  offset = std::min(offset, text.size());
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
  }
  return loc;
}

// Second pass over already validated JSON: records the offset of every value
// by JSON pointer and rejects duplicate keys, which the parser would merge.
class Locator {
 public:
  explicit Locator(std::string_view text) : s_(text) {}

  std::map<std::string, std::size_t> run() {
    value("");
    return std::move(where_);
  }

 private:
  void ws() {
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\n' || s_[i_] == '\r')) ++i_;
  }

  std::string string_token() {
    std::size_t start = i_++;
    while (i_ < s_.size() && s_[i_] != '"') i_ += s_[i_] == '\\' ? 2 : 1;
    ++i_;
    return json::parse(s_.substr(start, i_ - start)).get<std::string>();
  }

  static std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
      if (c == '~') out += "~0";
      else if (c == '/') out += "~1";
      else out += c;
    }
    return out;
  }

  void value(const std::string& path) {
    ws();
    where_[path] = i_;
    if (s_[i_] == '{') {
      object(path);
    } else if (s_[i_] == '[') {
      array(path);
    } else if (s_[i_] == '"') {
      string_token();
    } else {
      while (i_ < s_.size() && std::string_view(",]} \t\r\n").find(s_[i_]) == std::string_view::npos) ++i_;
    }
  }

  void object(const std::string& path) {
    ++i_;
    ws();
    if (s_[i_] == '}') {
      ++i_;
      return;
    }
    std::set<std::string> keys;
    for (;;) {
      ws();
      std::size_t at = i_;
      std::string key = string_token();
      if (!keys.insert(key).second) {
        auto loc = locate(s_, at);
        throw ParseError(ParseError::Kind::Schema, "duplicate key '" + key + "'", loc.line, loc.column);
      }
      ws();
      ++i_;  // ':'
      value(path + "/" + escape(key));
      ws();
      if (s_[i_++] == '}') return;
    }
  }

  void array(const std::string& path) {
    ++i_;
    ws();
    if (s_[i_] == ']') {
      ++i_;
      return;
    }
    for (std::size_t k = 0;; ++k) {
      value(path + "/" + std::to_string(k));
      ws();
      if (s_[i_++] == ']') return;
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::map<std::string, std::size_t> where_;
};

class DocumentBuilder {
 public:
  DocumentBuilder(std::string_view text, std::map<std::string, std::size_t> where)
      : text_(text), where_(std::move(where)) {}

  InputDocument build(const json& root) {
    expect(root.is_object(), "", "the document must be an object");
    for (const auto& [key, _] : root.items()) {
      expect(key == "ring" || key == "modules", "/" + key, "unknown key '" + key + "'");
    }
    expect(root.contains("ring"), "", "missing \"ring\"");
    InputDocument doc;
    doc.ring = ring(root["ring"]);
    if (root.contains("modules")) {
      const json& mods = root["modules"];
      expect(mods.is_object(), "/modules", "\"modules\" must be an object");
      for (const auto& [name, def] : mods.items()) {
        expect(!name.empty(), "/modules/", "module names must be non-empty");
        doc.modules.emplace(name, module(doc.ring, def, "/modules/" + name));
      }
    }
    return doc;
  }

 private:
  Location at(const std::string& path) const {
    auto it = where_.find(path);
    return it == where_.end() ? Location{} : locate(text_, it->second);
  }

  [[noreturn]] void fail(ParseError::Kind kind, const std::string& path, const std::string& what) const {
    auto loc = at(path);
    throw ParseError(kind, what, loc.line, loc.column);
  }

  void expect(bool ok, const std::string& path, const std::string& what) const {
    if (!ok) fail(ParseError::Kind::Schema, path, what);
  }

  RingPtr ring(const json& r) const {
    expect(r.is_object(), "/ring", "\"ring\" must be an object");
    for (const auto& [key, _] : r.items()) {
      expect(key == "char" || key == "vars", "/ring/" + key, "unknown key '" + key + "'");
    }
    std::uint32_t p = kDefaultPrime;
    if (r.contains("char")) {
      const json& c = r["char"];
      expect(c.is_number_unsigned() && c.get<std::uint64_t>() <= UINT32_MAX, "/ring/char",
             "\"char\" must be 0 or a prime");
      p = static_cast<std::uint32_t>(c.get<std::uint64_t>());
    }
    expect(r.contains("vars") && r["vars"].is_array(), "/ring", "\"vars\" must be an array of names");
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < r["vars"].size(); ++i) {
      expect(r["vars"][i].is_string(), "/ring/vars/" + std::to_string(i), "variable names must be strings");
      vars.push_back(r["vars"][i].get<std::string>());
    }
    try {
      return make_ring(p, std::move(vars));
    } catch (const DomainError& e) {
      fail(ParseError::Kind::Schema, r.contains("char") && p != 0 && !is_prime(p) ? "/ring/char" : "/ring/vars", e.what());
    }
  }

  Polynomial polynomial(const RingPtr& ring, const json& v, const std::string& path) const {
    expect(v.is_string(), path, "polynomials must be strings");
    Polynomial f;
    try {
      f = parse_polynomial(ring, v.get<std::string>());
    } catch (const ParseError& e) {
      auto loc = at(path);
      // column of the polynomial text inside the quotes
      throw ParseError(e.kind(), e.detail(), loc.line, loc.column + (e.column() ? e.column() : 1));
    } catch (const DomainError& e) {
      fail(ParseError::Kind::Syntax, path, e.what());
    }
    if (!f.is_homogeneous()) fail(ParseError::Kind::NonHomogeneous, path, "\"" + v.get<std::string>() + "\"");
    return f;
  }

  ModuleDefinition module(const RingPtr& ring, const json& def, const std::string& path) const {
    expect(def.is_object(), path, "a module is {\"ideal\": [...]} or {\"target_twists\": [...], \"matrix\": [...]}");
    ModuleDefinition out;
    if (def.contains("ideal")) {
      expect(def.size() == 1, path, "\"ideal\" cannot be combined with other keys");
      const json& gens = def["ideal"];
      expect(gens.is_array(), path + "/ideal", "\"ideal\" must be an array");
      out.kind = ModuleDefinition::Kind::Ideal;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        out.ideal.push_back(polynomial(ring, gens[i], path + "/ideal/" + std::to_string(i)));
      }
      out.presentation = cyclic_module(ring, out.ideal);
      return out;
    }
    for (const auto& [key, _] : def.items()) {
      expect(key == "target_twists" || key == "matrix", path + "/" + key, "unknown key '" + key + "'");
    }
    expect(def.contains("target_twists") && def.contains("matrix"), path,
           "a cokernel needs both \"target_twists\" and \"matrix\"");
    out.kind = ModuleDefinition::Kind::Cokernel;
    const json& tw = def["target_twists"];
    expect(tw.is_array(), path + "/target_twists", "\"target_twists\" must be an array of integers");
    for (std::size_t i = 0; i < tw.size(); ++i) {
      expect(tw[i].is_number_integer(), path + "/target_twists/" + std::to_string(i), "twists must be integers");
      out.target_twists.push_back(tw[i].get<int>());
    }
    const json& mat = def["matrix"];
    const std::string mpath = path + "/matrix";
    expect(mat.is_array() && mat.size() == out.target_twists.size(), mpath,
           "\"matrix\" needs one row per target twist");
    std::size_t cols = 0;
    for (std::size_t i = 0; i < mat.size(); ++i) {
      const std::string rpath = mpath + "/" + std::to_string(i);
      expect(mat[i].is_array(), rpath, "matrix rows must be arrays");
      if (i == 0) cols = mat[i].size();
      expect(mat[i].size() == cols, rpath, "matrix rows must have equal length");
      std::vector<Polynomial> row;
      for (std::size_t j = 0; j < cols; ++j) row.push_back(polynomial(ring, mat[i][j], rpath + "/" + std::to_string(j)));
      out.matrix.push_back(std::move(row));
    }
    std::vector<ModuleVector> relations;
    for (std::size_t j = 0; j < cols; ++j) {
      std::optional<int> degree;
      std::vector<Polynomial> column;
      for (std::size_t i = 0; i < out.matrix.size(); ++i) {
        const Polynomial& f = out.matrix[i][j];
        column.push_back(f);
        if (f.is_zero()) continue;
        int d = f.degree() + out.target_twists[i];
        if (degree && *degree != d) {
          fail(ParseError::Kind::DegreeMismatch, mpath + "/" + std::to_string(i) + "/" + std::to_string(j),
               "entry of degree " + std::to_string(f.degree()) + " in row of twist " +
                   std::to_string(out.target_twists[i]) + " gives column degree " + std::to_string(d) +
                   ", expected " + std::to_string(*degree));
        }
        degree = d;
      }
      relations.push_back(ModuleVector::from_polynomials(ring->field(), column));
    }
    out.presentation = cokernel(ring, out.target_twists, std::move(relations));
    return out;
  }

  std::string_view text_;
  std::map<std::string, std::size_t> where_;
};

json polynomials_json(const std::vector<Polynomial>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(f.to_string());
  return out;
}

}  // namespace

const Presentation& InputDocument::module(const std::string& name) const {
  auto it = modules.find(name);
  if (it == modules.end()) throw ParseError(ParseError::Kind::Schema, "no module named '" + name + "'");
  return it->second.presentation;
}

InputDocument parse_input(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    auto loc = locate(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    // drop nlohmann's own "[json.exception.parse_error.101] parse error at line 1, column 2: " prefix
    auto colon = what.find(": ");
    throw ParseError(ParseError::Kind::Syntax, colon == std::string::npos ? what : what.substr(colon + 2), loc.line,
                     loc.column);
  }
  return DocumentBuilder(text, Locator(text).run()).build(root);
}

std::string print_document(const InputDocument& doc) {
  json mods = json::object();
  for (const auto& [name, def] : doc.modules) {
    if (def.kind == ModuleDefinition::Kind::Ideal) {
      mods[name] = {{"ideal", polynomials_json(def.ideal)}};
    } else {
      json rows = json::array();
      for (const auto& row : def.matrix) rows.push_back(polynomials_json(row));
      mods[name] = {{"target_twists", def.target_twists}, {"matrix", rows}};
    }
  }
  json root = {{"ring", {{"char", doc.ring->field().characteristic()}, {"vars", doc.ring->variables()}}},
               {"modules", mods}};
  return root.dump(2) + "\n";
}

bool operator==(const ModuleDefinition& a, const ModuleDefinition& b) {
  return a.kind == b.kind && a.ideal == b.ideal && a.target_twists == b.target_twists && a.matrix == b.matrix;
}

bool operator==(const InputDocument& a, const InputDocument& b) {
  return *a.ring == *b.ring && a.modules == b.modules;
}

std::string render_betti(const BettiTable& table) {
  if (table.empty()) return "0 (zero module)\n";
  int imax = table.max_index();
  int rlo = 0, rhi = 0;
  bool first = true;
  for (const auto& [ij, _] : table.entries()) {
    int r = ij.second - ij.first;
    rlo = first ? r : std::min(rlo, r);
    rhi = first ? r : std::max(rhi, r);
    first = false;
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> labels;
  std::vector<std::string> header{""}, totals{"total:"};
  for (int i = 0; i <= imax; ++i) {
    header.push_back(std::to_string(i));
    long long sum = 0;
    for (const auto& [ij, b] : table.entries()) {
      if (ij.first == i) sum += b;
    }
    totals.push_back(std::to_string(sum));
  }
  rows.push_back(header);
  rows.push_back(totals);
  for (int r = rlo; r <= rhi; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (int i = 0; i <= imax; ++i) {
      int b = table.at(i, i + r);
      row.push_back(b == 0 ? "." : std::to_string(b));
    }
    rows.push_back(row);
  }
  std::vector<std::size_t> width(imax + 2, 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += ' ';
      line += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

json to_json(const ExtInt& v) {
  if (v.is_pos_inf()) return "+inf";
  if (v.is_neg_inf()) return "-inf";
  return v.value();
}

json to_json(const BettiTable& table) {
  json entries = json::array();
  for (const auto& [ij, b] : table.entries()) entries.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", b}});
  return entries;
}

json to_json(const HilbertNumerator& h) {
  return {{"offset", h.offset}, {"coefficients", h.coeffs}, {"text", h.to_string()}};
}

json to_json(const Presentation& P) {
  json rows = json::array();
  for (const auto& row : P.map.matrix()) rows.push_back(polynomials_json(row));
  return {{"generator_twists", P.generators().twists}, {"relation_twists", P.map.source().twists}, {"matrix", rows}};
}

}  // namespace gradex
