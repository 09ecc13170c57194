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

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gradex/scalar.hpp"

namespace gradex {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector with cached total degree. Slots past the ring's
/// variable count are always zero.
class Monomial {
 public:
  Monomial() = default;

  /// Throws DomainError for negative exponents, too many slots, or
  /// exponents above 65535.
  static Monomial from_exponents(std::span<const int> exponents);
  static Monomial variable(std::size_t index, int power = 1);

  int operator[](std::size_t i) const noexcept { return exp_[i]; }
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// Throws DomainError on exponent overflow.
  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const noexcept;
  /// Requires by.divides(*this).
  Monomial quotient(const Monomial& by) const noexcept;
  Monomial lcm(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;

  std::size_t hash() const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::int32_t degree_ = 0;
};

/// Degree reverse lexicographic comparison: higher degree wins; on equal
/// degree the monomial whose last differing exponent is smaller wins.
std::strong_ordering mono_cmp(const Monomial& a, const Monomial& b) noexcept;

/// All monomials of the given degree in n variables, in descending
/// degrevlex order. Empty for negative degree.
std::vector<Monomial> monomials_of_degree(std::size_t n, int degree);

/// dim_k R_d = C(d+n-1, n-1) for d >= 0, else 0.
std::uint64_t graded_piece_dim_ring(std::size_t n, int degree);

/// Standard graded polynomial ring k[x_1..x_n].
class Ring {
 public:
  Ring(Field field, std::vector<std::string> variables);

  const Field& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return variables_.size(); }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::optional<std::size_t> variable_index(std::string_view name) const;

  std::string mono_to_string(const Monomial& m) const;

  friend bool operator==(const Ring& a, const Ring& b) noexcept {
    return a.field_ == b.field_ && a.variables_ == b.variables_;
  }

 private:
  Field field_;
  std::vector<std::string> variables_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::uint32_t characteristic, std::vector<std::string> variables);

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse polynomial: terms strictly descending in degrevlex, no zero
/// coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Sorts, merges duplicate monomials and drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::size_t index);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  /// Degree of the leading term; -1 for zero.
  int degree() const noexcept { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  bool is_homogeneous() const noexcept;
  /// Nonzero degree-0 polynomial.
  bool is_unit() const noexcept { return terms_.size() == 1 && terms_.front().mono.is_one(); }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  Polynomial scaled(const Scalar& c) const;
  Polynomial times(const Monomial& m, const Scalar& c) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

/// Parses the polynomial grammar:
///   poly   := ['-'] term (('+'|'-') term)*
///   term   := coeff ('*' factor)* | factor ('*' factor)*
///   factor := var ('^' uint)?
///   coeff  := int | int '/' uint          (fractions: characteristic 0)
/// Whitespace is ignored. Errors are ParseError with column = 1-based
/// offset into text.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

}  // namespace gradex
