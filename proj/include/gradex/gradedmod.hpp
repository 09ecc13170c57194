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

#include <optional>
#include <string>
#include <vector>

#include "gradex/extint.hpp"
#include "gradex/gb.hpp"
#include "gradex/polyring.hpp"

namespace gradex {

/// F = (+)_i R(-e_i). Twist convention: M(a)_mu = M_{a+mu}, so basis
/// vector i has degree e_i.
struct GradedFreeModule {
  std::vector<int> twists;

  std::size_t rank() const noexcept { return twists.size(); }
  /// min e_i, +inf for rank 0.
  ExtInt indeg() const;

  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

/// Homogeneous map source -> target stored by columns: column j is the
/// image of basis vector j, homogeneous of degree source.twists[j] (or zero).
class GradedMap {
 public:
  GradedMap() = default;
  /// Throws DomainError if a column is not homogeneous of its source twist.
  GradedMap(RingPtr ring, GradedFreeModule source, GradedFreeModule target, std::vector<ModuleVector> columns);
  /// Matrix form: entries[i][j] maps source j into target i.
  static GradedMap from_matrix(RingPtr ring, GradedFreeModule source, GradedFreeModule target,
                               const std::vector<std::vector<Polynomial>>& entries);
  static GradedMap zero(RingPtr ring, GradedFreeModule source, GradedFreeModule target);
  static GradedMap identity(RingPtr ring, GradedFreeModule module);

  const RingPtr& ring() const noexcept { return ring_; }
  const GradedFreeModule& source() const noexcept { return source_; }
  const GradedFreeModule& target() const noexcept { return target_; }
  const std::vector<ModuleVector>& columns() const noexcept { return columns_; }

  Polynomial entry(std::size_t row, std::size_t col) const;
  std::vector<std::vector<Polynomial>> matrix() const;
  /// this o other (other first). Throws MismatchError unless other's
  /// target equals this source.
  GradedMap compose(const GradedMap& other) const;
  bool is_zero() const;
  /// True iff no entry is a nonzero constant.
  bool is_minimal() const;

 private:
  RingPtr ring_;
  GradedFreeModule source_;
  GradedFreeModule target_;
  std::vector<ModuleVector> columns_;
};

/// M = coker(map): generators = target basis, relations = columns.
struct Presentation {
  GradedMap map;

  const RingPtr& ring() const noexcept { return map.ring(); }
  const GradedFreeModule& generators() const noexcept { return map.target(); }
  const std::vector<ModuleVector>& relations() const noexcept { return map.columns(); }
};

Presentation free_module(const RingPtr& ring, std::vector<int> twists);
/// R/I.
Presentation cyclic_module(const RingPtr& ring, const std::vector<Polynomial>& ideal_gens);
/// Cokernel with the given target twists; source twists are read off the
/// columns (zero columns are dropped).
Presentation cokernel(const RingPtr& ring, std::vector<int> target_twists, std::vector<ModuleVector> relations);
/// M(a).
Presentation twist(const Presentation& P, int a);
Presentation direct_sum(const Presentation& P, const Presentation& Q);
/// M / m^t M.
Presentation truncate_power(const Presentation& P, int t);

/// Generators of ker(phi), as the columns of a map into phi.source().
GradedMap kernel(const GradedMap& phi, unsigned workers = 1);

/// Minimal presentation: unit entries pruned, redundant relations removed.
Presentation minimalize(const Presentation& P);

/// (sum_k c_k t^{offset+k}); Hilbert series = numerator / (1-t)^n.
struct HilbertNumerator {
  int offset = 0;
  std::vector<long long> coeffs;

  bool is_zero() const noexcept { return coeffs.empty(); }
  long long coefficient(int exponent) const;
  std::string to_string() const;
  friend bool operator==(const HilbertNumerator&, const HilbertNumerator&) = default;
  static HilbertNumerator normalized(int offset, std::vector<long long> coeffs);
};

/// Numerator of the Hilbert series of R/J for a monomial ideal J in n vars.
HilbertNumerator monomial_ideal_numerator(std::vector<Monomial> gens);

HilbertNumerator hilbert_series(const Presentation& P);
/// n minus the multiplicity of t=1 as a root; -inf for the zero module.
ExtInt krull_dim(const HilbertNumerator& h, std::size_t nvars);
ExtInt krull_dim(const Presentation& P);
/// dim_k M_d by linear algebra on the degree-d strand.
std::uint64_t graded_piece_dim(const Presentation& P, int d);
/// dim_k M_d read from the Hilbert series.
long long hilbert_function(const HilbertNumerator& h, std::size_t nvars, int d);

ExtInt indeg(const Presentation& P);
/// +inf when dim M > 0, -inf for zero, otherwise the top nonzero degree.
ExtInt end(const Presentation& P);
bool is_zero_module(const Presentation& P);

Presentation tensor(const Presentation& P, const Presentation& Q);

/// pdim + dim = n. Throws DomainError for the zero module.
bool is_cohen_macaulay(const Presentation& P);

struct GradedModuleInvariants {
  ExtInt indeg;
  ExtInt end;
  ExtInt krull_dim;
  HilbertNumerator hilbert_numerator;
  std::optional<bool> is_cm;  ///< absent for the zero module
};

GradedModuleInvariants invariants(const Presentation& P);

}  // namespace gradex
