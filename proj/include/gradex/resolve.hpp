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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradex/extint.hpp"
#include "gradex/gradedmod.hpp"

namespace gradex {

/// 0 <- F_0 <- F_1 <- ... <- F_l with maps[i] : F_{i+1} -> F_i.
/// The zero module has no free modules at all.
struct Resolution {
  RingPtr ring;
  std::vector<GradedFreeModule> modules;
  std::vector<GradedMap> maps;

  bool is_zero_module() const noexcept { return modules.empty(); }
  /// l; requires a nonzero module.
  std::size_t length() const { return modules.size() - 1; }

  friend bool operator==(const Resolution& a, const Resolution& b);
};

/// (i, j) -> beta_{i,j}; only nonzero entries are stored.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(const Resolution& res);

  const std::map<std::pair<int, int>, int>& entries() const noexcept { return entries_; }
  int at(int i, int j) const;
  bool empty() const noexcept { return entries_.empty(); }
  /// Largest homological index with a nonzero entry; -1 if empty.
  int max_index() const;
  /// b'_i = min{j : beta_{i,j} != 0}; +inf when row i is empty.
  ExtInt min_degree(int i) const;
  /// b_i = max{j : beta_{i,j} != 0}; -inf when row i is empty.
  ExtInt max_degree(int i) const;
  /// max{j - i}; -inf for the empty table.
  ExtInt regularity() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, int>, int> entries_;
};

/// Minimal graded free resolution by iterated Schreyer kernels and
/// minimal-generator selection. Consults the in-process memo and, when
/// GRADEX_CACHE_DIR is set, the on-disk cache.
Resolution minimal_free_resolution(const Presentation& P, unsigned workers = 1);
/// Same, without any caching.
Resolution compute_resolution(const Presentation& P, unsigned workers = 1);

BettiTable betti(const Presentation& P);
ExtInt reg(const Presentation& P);
/// Throws DomainError for the zero module.
int pdim(const Presentation& P);

/// Text form of a presentation used as the cache key (ring, twists, matrix).
std::string canonical_text(const Presentation& P);
std::string serialize_resolution(const Resolution& res);
/// Throws ParseError on malformed text.
Resolution deserialize_resolution(const RingPtr& ring, const std::string& text);

/// Content-addressed on-disk store of resolutions. Files are "<hash>.res"
/// beginning with the header line "gradexres 1".
class ResolutionCache {
 public:
  explicit ResolutionCache(std::filesystem::path dir);
  /// Cache rooted at $GRADEX_CACHE_DIR, if set and non-empty.
  static std::optional<ResolutionCache> from_environment();

  struct Lookup {
    std::optional<Resolution> resolution;
    std::optional<std::string> warning;  ///< set when a file existed but was unusable
  };

  Lookup get(const Presentation& P) const;
  /// Write-then-rename, so concurrent readers never see partial files.
  void put(const Presentation& P, const Resolution& res) const;
  std::filesystem::path path_for(const Presentation& P) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace gradex
