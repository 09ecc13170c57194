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
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gradex {

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// Coefficient value relative to a Field. Modular values use the residue in
/// [0,p); rational values hold a canonical mpq (zero is stored as null), so
/// equality and zero tests never need the field.
class Scalar {
 public:
  Scalar() = default;

  static Scalar from_residue(std::uint32_t r) {
    Scalar s;
    s.residue_ = r;
    return s;
  }
  static Scalar from_rational(mpq_class q);

  std::uint32_t residue() const noexcept { return residue_; }
  /// Null for zero or for modular values.
  const mpq_class* rational() const noexcept { return rational_.get(); }

  bool is_zero() const noexcept { return residue_ == 0 && !rational_; }

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::uint32_t residue_ = 0;
  std::shared_ptr<const mpq_class> rational_;
};

/// A prime field F_p or the rationals (characteristic 0).
class Field {
 public:
  /// Throws DomainError unless characteristic is 0 or a prime below 2^31.
  explicit Field(std::uint32_t characteristic = kDefaultPrime);

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }

  Scalar zero() const { return {}; }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long long v) const;
  /// Parses a decimal integer or fraction "a/b"; fractions are rejected
  /// in positive characteristic unless the denominator is invertible.
  Scalar from_string(std::string_view text) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  /// Throws DomainError on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_one(const Scalar& a) const;
  /// Symmetric residues (-1 rather than p-1) for characteristic p.
  bool is_negative(const Scalar& a) const;
  std::string to_string(const Scalar& a) const;

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t v);

/// Field-tagged value with checked arithmetic; used at API boundaries.
class FieldElement {
 public:
  FieldElement(Field field, Scalar value) : field_(field), value_(std::move(value)) {}
  FieldElement(Field field, long long v) : field_(field), value_(field.from_int(v)) {}

  const Field& field() const noexcept { return field_; }
  const Scalar& value() const noexcept { return value_; }
  std::string to_string() const { return field_.to_string(value_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  Field field_;
  Scalar value_;
};

FieldElement field_add(const FieldElement& a, const FieldElement& b);
FieldElement field_inv(const FieldElement& a);

}  // namespace gradex
