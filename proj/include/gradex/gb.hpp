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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gradex/polyring.hpp"

namespace gradex {

/// Term of a free-module element: mono * e_comp with a coefficient.
struct ModTerm {
  Monomial mono;
  std::uint32_t comp = 0;
  Scalar coeff;
};

/// Term-over-position: degrevlex on the monomial first, then the smaller
/// component index is the larger term.
inline std::strong_ordering module_cmp(const Monomial& am, std::uint32_t ac, const Monomial& bm,
                                       std::uint32_t bc) noexcept {
  if (auto c = mono_cmp(am, bm); c != 0) return c;
  return bc <=> ac;
}

/// Element of a free module F = (+)_i R(-e_i): sparse terms, strictly
/// descending in the module order, no zero coefficients. Twists live with
/// the caller.
class ModuleVector {
 public:
  ModuleVector() = default;
  /// Sorts and combines; drops zero coefficients.
  ModuleVector(const Field& field, std::vector<ModTerm> terms);

  static ModuleVector unit(const Field& field, std::uint32_t comp);
  /// Component polynomials -> vector.
  static ModuleVector from_polynomials(const Field& field, std::span<const Polynomial> components);

  const std::vector<ModTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const ModTerm& leading() const { return terms_.front(); }

  /// Degree under the given twists (mono degree + twist of the component)
  /// of the leading term; nullopt for zero.
  std::optional<int> degree(std::span<const int> twists) const;
  bool is_homogeneous(std::span<const int> twists) const;

  /// Polynomial entry for component `comp`.
  Polynomial component(const RingPtr& ring, std::uint32_t comp) const;
  std::vector<Polynomial> to_polynomials(const RingPtr& ring, std::size_t rank) const;

  ModuleVector scaled(const Field& field, const Monomial& m, const Scalar& c) const;
  /// Monic normalisation (leading coefficient 1).
  ModuleVector monic(const Field& field) const;
  /// this + c*m*other.
  ModuleVector axpy(const Field& field, const Scalar& c, const Monomial& m, const ModuleVector& other) const;

  friend bool operator==(const ModuleVector& a, const ModuleVector& b);

 private:
  std::vector<ModTerm> terms_;
};

/// How Buchberger records each basis element as a combination of inputs.
enum class LiftMode {
  None,
  Inputs,   ///< lift coordinates index the input generators
  Minimal,  ///< lift coordinates index the selected minimal generators
};

struct GbOptions {
  LiftMode lift = LiftMode::None;
  /// Detect which inputs belong to a minimal generating set.
  bool select_minimal = false;
  /// Same-degree S-pairs are pre-reduced on this many threads. Output does
  /// not depend on it.
  unsigned workers = 1;
  /// Stop after this degree (truncated basis); nullopt runs to completion.
  std::optional<int> degree_limit;
};

/// Reduced Groebner basis of a graded submodule of F = (+) R(-twists[i])
/// for the term-over-position degrevlex order. Elements are monic, sorted
/// by increasing degree and then increasing leading term.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<int> twists;
  std::vector<ModuleVector> elements;
  /// Present when a LiftMode other than None was requested: element i
  /// equals sum_j lifts[i]_j * input_j (in the lift basis).
  std::vector<ModuleVector> lifts;
  std::vector<int> lift_twists;
  /// Indices of the inputs forming a minimal generating set (select_minimal).
  std::vector<std::size_t> minimal;

  std::vector<int> degrees() const;
  bool has_lifts() const noexcept { return !lifts.empty() || elements.empty(); }
};

/// Reduced basis of the submodule generated by `gens`. Throws DomainError
/// on non-homogeneous input.
GroebnerBasis buchberger(const RingPtr& ring, std::vector<int> twists, std::span<const ModuleVector> gens,
                         const GbOptions& options = {});

/// Fully reduced remainder of v modulo G; zero iff v lies in the submodule.
ModuleVector normal_form(const ModuleVector& v, const GroebnerBasis& G);

/// Generators of the syzygy module of G's elements, living in the free
/// module with twists G.degrees(): Schreyer pair syzygies for the minimal
/// lcm quotients of each element.
std::vector<ModuleVector> syzygies(const GroebnerBasis& G);

/// Generators of ker(F_src -> F) where F_src has one basis vector per
/// column (twists = column degrees, or src_twists when columns may be zero).
std::vector<ModuleVector> kernel_generators(const RingPtr& ring, const std::vector<int>& twists,
                                            std::span<const ModuleVector> columns,
                                            const std::vector<int>& src_twists, unsigned workers = 1);

/// Kernel of the map sending basis vector j to `columns[j]`, given a basis
/// G of the column span whose lifts index `columns`.
std::vector<ModuleVector> kernel_from_basis(const GroebnerBasis& G, std::span<const ModuleVector> columns);

}  // namespace gradex
