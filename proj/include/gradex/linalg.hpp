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
#include <unordered_map>
#include <utility>
#include <vector>

#include "gradex/polyring.hpp"

namespace gradex {

/// Sparse row: (column, value) pairs with strictly increasing columns.
using SparseRow = std::vector<std::pair<std::uint32_t, Scalar>>;

/// Dense numbering of (monomial, component) pairs.
class BasisIndexer {
 public:
  std::uint32_t index_of(const Monomial& m, std::uint32_t comp);
  std::size_t size() const noexcept { return map_.size(); }

 private:
  struct Key {
    Monomial mono;
    std::uint32_t comp;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return k.mono.hash() * 31 + k.comp; }
  };
  std::unordered_map<Key, std::uint32_t, KeyHash> map_;
};

/// Incremental Gaussian elimination over a field; tracks the rank of the
/// span of inserted rows.
class SparseEliminator {
 public:
  explicit SparseEliminator(Field field) : field_(field) {}

  /// Unsorted rows and repeated columns are accepted. Returns true when
  /// the row increased the rank.
  bool insert(SparseRow row);
  /// Reduces a row against the current pivots without inserting it.
  SparseRow reduce(SparseRow row) const;
  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  SparseRow canonical(SparseRow row) const;

  Field field_;
  std::unordered_map<std::uint32_t, SparseRow> pivots_;  // monic, keyed by leading column
};

}  // namespace gradex
