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

#include "gradex/resolve.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <unordered_map>

#include "gradex/error.hpp"

namespace gradex {

bool operator==(const Resolution& a, const Resolution& b) {
  if (a.modules != b.modules || a.maps.size() != b.maps.size()) return false;
  for (std::size_t i = 0; i < a.maps.size(); ++i) {
    if (a.maps[i].columns() != b.maps[i].columns()) return false;
  }
  return true;
}

BettiTable::BettiTable(const Resolution& res) {
  for (std::size_t i = 0; i < res.modules.size(); ++i) {
    for (int e : res.modules[i].twists) ++entries_[{static_cast<int>(i), e}];
  }
}

int BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::max_index() const {
  int m = -1;
  for (const auto& [ij, v] : entries_) m = std::max(m, ij.first);
  return m;
}

ExtInt BettiTable::min_degree(int i) const {
  ExtInt out = ExtInt::pos_inf();
  for (const auto& [ij, v] : entries_) {
    if (ij.first == i) out = min(out, ExtInt(ij.second));
  }
  return out;
}

ExtInt BettiTable::max_degree(int i) const {
  ExtInt out = ExtInt::neg_inf();
  for (const auto& [ij, v] : entries_) {
    if (ij.first == i) out = max(out, ExtInt(ij.second));
  }
  return out;
}

ExtInt BettiTable::regularity() const {
  ExtInt out = ExtInt::neg_inf();
  for (const auto& [ij, v] : entries_) out = max(out, ExtInt(ij.second - ij.first));
  return out;
}

Resolution compute_resolution(const Presentation& P, unsigned workers) {
  const RingPtr& ring = P.ring();
  Presentation pm = minimalize(P);
  Resolution res;
  res.ring = ring;
  if (pm.generators().rank() == 0) return res;
  res.modules.push_back(pm.generators());

  std::vector<ModuleVector> cols = pm.relations();
  std::vector<int> src = pm.map.source().twists;
  GroebnerBasis G;
  if (!cols.empty()) {
    GbOptions opt;
    opt.lift = LiftMode::Inputs;
    opt.workers = workers;
    G = buchberger(ring, pm.generators().twists, cols, opt);
    G.lift_twists = src;
  }
  const std::size_t n = ring->nvars();
  while (!cols.empty()) {
    GradedFreeModule target = res.modules.back();
    res.modules.push_back({src});
    res.maps.emplace_back(ring, GradedFreeModule{src}, std::move(target), cols);
    if (res.modules.size() > n + 1) throw Error("internal error: resolution longer than the number of variables");

    std::vector<ModuleVector> kernel = kernel_from_basis(G, cols);
    if (kernel.empty()) break;
    GbOptions opt;
    opt.lift = LiftMode::Minimal;
    opt.select_minimal = true;
    opt.workers = workers;
    GroebnerBasis next = buchberger(ring, src, kernel, opt);
    std::vector<ModuleVector> next_cols;
    std::vector<int> next_src;
    for (std::size_t j : next.minimal) {
      next_src.push_back(*kernel[j].degree(src));
      next_cols.push_back(std::move(kernel[j]));
    }
    G = std::move(next);
    cols = std::move(next_cols);
    src = std::move(next_src);
  }
  return res;
}

namespace {

std::mutex memo_mutex;
std::unordered_map<std::string, Resolution>& memo() {
  static std::unordered_map<std::string, Resolution> m;
  return m;
}

const std::optional<ResolutionCache>& env_cache() {
  static const std::optional<ResolutionCache> cache = ResolutionCache::from_environment();
  return cache;
}

}  // namespace

Resolution minimal_free_resolution(const Presentation& P, unsigned workers) {
  std::string key = canonical_text(P);
  {
    std::lock_guard lock(memo_mutex);
    auto it = memo().find(key);
    if (it != memo().end()) return it->second;
  }
  const auto& disk = env_cache();
  std::optional<Resolution> found;
  if (disk) {
    auto hit = disk->get(P);
    found = std::move(hit.resolution);
  }
  Resolution res = found ? std::move(*found) : compute_resolution(P, workers);
  if (disk && !found) {
    try {
      disk->put(P, res);
    } catch (const std::exception&) {
      // An unwritable cache directory only costs recomputation.
    }
  }
  std::lock_guard lock(memo_mutex);
  return memo().emplace(std::move(key), std::move(res)).first->second;
}

BettiTable betti(const Presentation& P) { return BettiTable(minimal_free_resolution(P)); }

ExtInt reg(const Presentation& P) { return betti(P).regularity(); }

int pdim(const Presentation& P) {
  Resolution res = minimal_free_resolution(P);
  if (res.is_zero_module()) throw DomainError("projective dimension of the zero module");
  return static_cast<int>(res.length());
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

void write_map(std::ostream& out, const GradedMap& m) {
  auto mat = m.matrix();
  out << "map " << m.target().rank() << ' ' << m.source().rank() << '\n';
  for (const auto& row : mat) {
    for (const auto& e : row) out << e.to_string() << '\n';
  }
}

void write_twists(std::ostream& out, const char* tag, const std::vector<int>& tw) {
  out << tag << ' ' << tw.size();
  for (int e : tw) out << ' ' << e;
  out << '\n';
}

std::string ring_line(const Ring& r) {
  std::string s = "ring " + std::to_string(r.field().characteristic());
  for (const auto& v : r.variables()) s += ' ' + v;
  return s;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

}  // namespace

std::string canonical_text(const Presentation& P) {
  std::ostringstream out;
  out << ring_line(*P.ring()) << '\n';
  write_twists(out, "gens", P.generators().twists);
  write_twists(out, "rels", P.map.source().twists);
  write_map(out, P.map);
  return out.str();
}

std::string serialize_resolution(const Resolution& res) {
  std::ostringstream out;
  out << "modules " << res.modules.size() << '\n';
  for (const auto& F : res.modules) write_twists(out, "twists", F.twists);
  for (const auto& m : res.maps) write_map(out, m);
  out << "end\n";
  return out.str();
}

Resolution deserialize_resolution(const RingPtr& ring, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto next = [&]() -> std::string {
    if (!std::getline(in, line)) throw ParseError(ParseError::Kind::Syntax, "unexpected end of resolution text", lineno + 1, 1);
    ++lineno;
    return line;
  };
  auto expect_word = [&](std::istringstream& ls, const std::string& word) {
    std::string w;
    if (!(ls >> w) || w != word) throw ParseError(ParseError::Kind::Syntax, "expected '" + word + "'", lineno, 1);
  };
  Resolution res;
  res.ring = ring;
  std::istringstream head(next());
  expect_word(head, "modules");
  std::size_t count = 0;
  if (!(head >> count)) throw ParseError(ParseError::Kind::Syntax, "bad module count", lineno, 1);
  for (std::size_t i = 0; i < count; ++i) {
    std::istringstream ls(next());
    expect_word(ls, "twists");
    std::size_t r = 0;
    if (!(ls >> r)) throw ParseError(ParseError::Kind::Syntax, "bad rank", lineno, 1);
    GradedFreeModule F;
    F.twists.resize(r);
    for (auto& e : F.twists) {
      if (!(ls >> e)) throw ParseError(ParseError::Kind::Syntax, "bad twist", lineno, 1);
    }
    res.modules.push_back(std::move(F));
  }
  for (std::size_t i = 0; i + 1 < count; ++i) {
    std::istringstream ls(next());
    expect_word(ls, "map");
    std::size_t rows = 0, cols = 0;
    if (!(ls >> rows >> cols) || rows != res.modules[i].rank() || cols != res.modules[i + 1].rank()) {
      throw ParseError(ParseError::Kind::Syntax, "map shape does not match module ranks", lineno, 1);
    }
    std::vector<std::vector<Polynomial>> entries(rows);
    for (auto& row : entries) {
      for (std::size_t j = 0; j < cols; ++j) row.push_back(parse_polynomial(ring, next()));
    }
    res.maps.push_back(GradedMap::from_matrix(ring, res.modules[i + 1], res.modules[i], entries));
  }
  if (next() != "end") throw ParseError(ParseError::Kind::Syntax, "missing 'end'", lineno, 1);
  return res;
}

ResolutionCache::ResolutionCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<ResolutionCache> ResolutionCache::from_environment() {
  const char* dir = std::getenv("GRADEX_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return ResolutionCache(dir);
}

std::filesystem::path ResolutionCache::path_for(const Presentation& P) const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(canonical_text(P))));
  return dir_ / (std::string(buf) + ".res");
}

ResolutionCache::Lookup ResolutionCache::get(const Presentation& P) const {
  Lookup out;
  auto path = path_for(P);
  std::ifstream in(path, std::ios::binary);
  if (!in) return out;
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  try {
    std::string key = canonical_text(P);
    const std::string header = "gradexres 1\n";
    if (text.compare(0, header.size(), header) != 0) {
      out.warning = "cache file " + path.string() + " has an unknown format version; ignored";
      return out;
    }
    std::size_t pos = header.size();
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos || text.compare(pos, 4, "key ") != 0) throw Error("missing key line");
    std::size_t len = std::stoull(text.substr(pos + 4, eol - pos - 4));
    pos = eol + 1;
    if (pos + len > text.size()) throw Error("truncated key");
    if (text.compare(pos, len, key) != 0) {
      out.warning = "cache file " + path.string() + " belongs to a different presentation; ignored";
      return out;
    }
    out.resolution = deserialize_resolution(P.ring(), text.substr(pos + len));
  } catch (const std::exception& e) {
    out.resolution.reset();
    out.warning = "cache file " + path.string() + " is corrupted (" + e.what() + "); ignored";
  }
  return out;
}

void ResolutionCache::put(const Presentation& P, const Resolution& res) const {
  std::filesystem::create_directories(dir_);
  std::string key = canonical_text(P);
  auto path = path_for(P);
  std::random_device rd;
  auto tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << "gradexres 1\n" << "key " << key.size() << '\n' << key << serialize_resolution(res);
    if (!out) throw Error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace gradex
