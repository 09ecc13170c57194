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

#include "gradex/scalar.hpp"

#include <charconv>

#include "gradex/error.hpp"

namespace gradex {

Scalar Scalar::from_rational(mpq_class q) {
  q.canonicalize();
  Scalar s;
  if (q != 0) s.rational_ = std::make_shared<const mpq_class>(std::move(q));
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.rational_ || b.rational_) {
    if (!a.rational_ || !b.rational_) return false;
    return *a.rational_ == *b.rational_;
  }
  return a.residue_ == b.residue_;
}

bool is_prime(std::uint32_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= v; d += 2) {
    if (v % d == 0) return false;
  }
  return true;
}

Field::Field(std::uint32_t characteristic) : p_(characteristic) {
  if (p_ != 0 && (p_ >= (1u << 31) || !is_prime(p_))) {
    throw DomainError("characteristic must be 0 or a prime below 2^31, got " + std::to_string(p_));
  }
}

namespace {

mpq_class as_mpq(const Scalar& a) {
  return a.rational() ? *a.rational() : mpq_class(0);
}

std::uint32_t reduce_signed(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce_mpz(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

Scalar Field::from_int(long long v) const {
  if (is_rational()) return Scalar::from_rational(mpq_class(static_cast<long>(v)));
  return Scalar::from_residue(reduce_signed(v, p_));
}

Scalar Field::from_string(std::string_view text) const {
  auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  mpz_class n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0) {
    throw DomainError("malformed coefficient '" + std::string(text) + "'");
  }
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  if (is_rational()) return Scalar::from_rational(mpq_class(n, d));
  auto dr = reduce_mpz(d, p_);
  if (dr == 0) throw DomainError("denominator vanishes modulo " + std::to_string(p_));
  return div(Scalar::from_residue(reduce_mpz(n, p_)), Scalar::from_residue(dr));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return Scalar::from_rational(as_mpq(a) + as_mpq(b));
  std::uint32_t s = a.residue() + b.residue();
  return Scalar::from_residue(s >= p_ ? s - p_ : s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return Scalar::from_rational(as_mpq(a) - as_mpq(b));
  return Scalar::from_residue(a.residue() >= b.residue() ? a.residue() - b.residue()
                                                        : a.residue() + p_ - b.residue());
}

Scalar Field::neg(const Scalar& a) const {
  if (is_rational()) return Scalar::from_rational(-as_mpq(a));
  return Scalar::from_residue(a.residue() == 0 ? 0 : p_ - a.residue());
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_rational()) {
    if (a.is_zero() || b.is_zero()) return {};
    return Scalar::from_rational(as_mpq(a) * as_mpq(b));
  }
  return Scalar::from_residue(
      static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.residue()) * b.residue() % p_));
}

Scalar Field::inv(const Scalar& a) const {
  if (a.is_zero()) throw DomainError("division by zero");
  if (is_rational()) return Scalar::from_rational(1 / as_mpq(a));
  // Extended Euclid on (a, p).
  long long t = 0, new_t = 1;
  long long r = p_, new_r = a.residue();
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return Scalar::from_residue(reduce_signed(t, p_));
}

bool Field::is_one(const Scalar& a) const {
  if (is_rational()) return a.rational() && *a.rational() == 1;
  return a.residue() == 1;
}

bool Field::is_negative(const Scalar& a) const {
  if (is_rational()) return a.rational() && sgn(*a.rational()) < 0;
  return a.residue() > p_ / 2;
}

std::string Field::to_string(const Scalar& a) const {
  if (is_rational()) return a.rational() ? a.rational()->get_str() : "0";
  if (is_negative(a)) return "-" + std::to_string(p_ - a.residue());
  return std::to_string(a.residue());
}

namespace {

void require_same(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) {
    throw MismatchError("field mismatch: characteristic " + std::to_string(a.field().characteristic()) +
                        " vs " + std::to_string(b.field().characteristic()));
  }
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_.add(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_.sub(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_.mul(a.value_, b.value_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_.div(a.value_, b.value_)};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

FieldElement field_add(const FieldElement& a, const FieldElement& b) { return a + b; }

FieldElement field_inv(const FieldElement& a) { return {a.field(), a.field().inv(a.value())}; }

}  // namespace gradex
