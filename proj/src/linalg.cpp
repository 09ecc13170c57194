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

#include "gradex/linalg.hpp"

#include <algorithm>

namespace gradex {

std::uint32_t BasisIndexer::index_of(const Monomial& m, std::uint32_t comp) {
  auto [it, inserted] = map_.try_emplace(Key{m, comp}, static_cast<std::uint32_t>(map_.size()));
  return it->second;
}

SparseRow SparseEliminator::canonical(SparseRow row) const {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  out.reserve(row.size());
  for (auto& e : row) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second = field_.add(out.back().second, e.second);
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!e.second.is_zero()) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

SparseRow SparseEliminator::reduce(SparseRow row) const {
  row = canonical(std::move(row));
  SparseRow done;
  // Clear pivot columns left to right; entries before the current position
  // are final.
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      done.push_back(std::move(row.front()));
      row.erase(row.begin());
      continue;
    }
    const SparseRow& p = it->second;
    Scalar f = field_.neg(row.front().second);
    SparseRow merged;
    merged.reserve(row.size() + p.size());
    auto a = row.begin() + 1;
    auto b = p.begin() + 1;
    while (a != row.end() || b != p.end()) {
      if (b == p.end() || (a != row.end() && a->first < b->first)) {
        merged.push_back(*a++);
      } else if (a == row.end() || b->first < a->first) {
        merged.push_back({b->first, field_.mul(f, b->second)});
        ++b;
      } else {
        Scalar v = field_.add(a->second, field_.mul(f, b->second));
        if (!v.is_zero()) merged.push_back({a->first, v});
        ++a;
        ++b;
      }
    }
    row = std::move(merged);
  }
  return done;
}

bool SparseEliminator::insert(SparseRow row) {
  SparseRow r = reduce(std::move(row));
  if (r.empty()) return false;
  Scalar inv = field_.inv(r.front().second);
  for (auto& e : r) e.second = field_.mul(e.second, inv);
  pivots_.emplace(r.front().first, std::move(r));
  return true;
}

}  // namespace gradex
