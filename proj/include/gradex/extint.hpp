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
#include <string>

namespace gradex {

/// Integer extended by +inf and -inf (indeg/end/reg/dim sentinels).
class ExtInt {
 public:
  constexpr ExtInt() = default;
  constexpr ExtInt(long long v) : kind_(Kind::Finite), value_(v) {}  // NOLINT: implicit on purpose

  static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }
  static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }

  constexpr bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  constexpr bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
  constexpr bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
  /// Requires is_finite().
  constexpr long long value() const noexcept { return value_; }

  std::string to_string() const {
    switch (kind_) {
      case Kind::PosInf: return "+inf";
      case Kind::NegInf: return "-inf";
      default: return std::to_string(value_);
    }
  }

  constexpr friend bool operator==(const ExtInt& a, const ExtInt& b) noexcept {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }
  constexpr friend std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) noexcept {
    if (a.kind_ != b.kind_) return rank(a.kind_) <=> rank(b.kind_);
    if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  /// Finite + inf = inf. (+inf) + (-inf) is not used by the engine and
  /// yields -inf.
  constexpr friend ExtInt operator+(const ExtInt& a, const ExtInt& b) noexcept {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    if (a.is_pos_inf() || b.is_pos_inf()) return pos_inf();
    return ExtInt(a.value_ + b.value_);
  }
  constexpr friend ExtInt operator-(const ExtInt& a) noexcept {
    if (a.is_pos_inf()) return neg_inf();
    if (a.is_neg_inf()) return pos_inf();
    return ExtInt(-a.value_);
  }
  constexpr friend ExtInt operator-(const ExtInt& a, const ExtInt& b) noexcept { return a + (-b); }

 private:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };
  constexpr explicit ExtInt(Kind k) : kind_(k) {}
  static constexpr int rank(Kind k) { return static_cast<int>(k); }

  Kind kind_ = Kind::Finite;
  long long value_ = 0;
};

inline ExtInt max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }
inline ExtInt min(const ExtInt& a, const ExtInt& b) { return a < b ? a : b; }

}  // namespace gradex
