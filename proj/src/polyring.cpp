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

#include "gradex/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "gradex/error.hpp"

namespace gradex {

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  if (exponents.size() > kMaxVariables) {
    throw DomainError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 0xffff) throw DomainError("exponent out of range");
    m.exp_[i] = static_cast<std::uint16_t>(exponents[i]);
    m.degree_ += exponents[i];
  }
  return m;
}

Monomial Monomial::variable(std::size_t index, int power) {
  if (index >= kMaxVariables) throw DomainError("variable index out of range");
  if (power < 0 || power > 0xffff) throw DomainError("exponent out of range");
  Monomial m;
  m.exp_[index] = static_cast<std::uint16_t>(power);
  m.degree_ = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned s = unsigned(exp_[i]) + other.exp_[i];
    if (s > 0xffff) throw DomainError("exponent overflow in monomial product");
    m.exp_[i] = static_cast<std::uint16_t>(s);
  }
  m.degree_ = degree_ + other.degree_;
  return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& by) const noexcept {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) m.exp_[i] = static_cast<std::uint16_t>(exp_[i] - by.exp_[i]);
  m.degree_ = degree_ - by.degree_;
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const noexcept {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exp_[i] = std::max(exp_[i], other.exp_[i]);
    m.degree_ += m.exp_[i];
  }
  return m;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exp_) h = (h ^ e) * 1099511628211ull;
  return h;
}

std::strong_ordering mono_cmp(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || n == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<int> e(n, 0);
  // Enumerate compositions of degree into n parts.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return mono_cmp(a, b) > 0; });
  return out;
}

std::uint64_t graded_piece_dim_ring(std::size_t n, int degree) {
  if (degree < 0) return 0;
  if (n == 0) return degree == 0 ? 1 : 0;
  // C(d+n-1, n-1), computed incrementally; each partial product is an integer.
  std::uint64_t r = 1;
  for (std::uint64_t k = 1; k < n; ++k) r = r * (static_cast<std::uint64_t>(degree) + k) / k;
  return r;
}

Ring::Ring(Field field, std::vector<std::string> variables)
    : field_(field), variables_(std::move(variables)) {
  if (variables_.empty()) throw DomainError("a ring needs at least one variable");
  if (variables_.size() > kMaxVariables) {
    throw DomainError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& v : variables_) {
    bool ok = !v.empty() && (std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_');
    for (char c : v) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) throw DomainError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
  }
}

std::optional<std::size_t> Ring::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

std::string Ring::mono_to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variables_[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

RingPtr make_ring(std::uint32_t characteristic, std::vector<std::string> variables) {
  return std::make_shared<const Ring>(Field(characteristic), std::move(variables));
}

namespace {

const RingPtr& common_ring(const Polynomial& f, const Polynomial& g) {
  if (!f.ring()) return g.ring();
  if (!g.ring() || f.ring() == g.ring()) return f.ring();
  if (!(*f.ring() == *g.ring())) throw MismatchError("polynomials belong to different rings");
  return f.ring();
}

bool term_greater(const Term& a, const Term& b) { return mono_cmp(a.mono, b.mono) > 0; }

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  std::stable_sort(terms.begin(), terms.end(), term_greater);
  const Field& k = ring_->field();
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = k.add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  return monomial(std::move(ring), Monomial{}, c);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw DomainError("variable index out of range");
  Scalar one = ring->field().one();
  return monomial(std::move(ring), Monomial::variable(index), one);
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, ring_->field().neg(t.coeff)});
  return r;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  const RingPtr& ring = common_ring(f, g);
  Polynomial r(ring);
  if (!ring) return r;
  const Field& k = ring->field();
  auto a = f.terms_.begin(), b = g.terms_.begin();
  while (a != f.terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end() || (a != f.terms_.end() && mono_cmp(a->mono, b->mono) > 0)) {
      r.terms_.push_back(*a++);
    } else if (a == f.terms_.end() || mono_cmp(a->mono, b->mono) < 0) {
      r.terms_.push_back(*b++);
    } else {
      Scalar c = k.add(a->coeff, b->coeff);
      if (!c.is_zero()) r.terms_.push_back({a->mono, c});
      ++a;
      ++b;
    }
  }
  return r;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  const RingPtr& ring = common_ring(f, g);
  if (f.is_zero() || g.is_zero()) return Polynomial(ring);
  const Field& k = ring->field();
  std::vector<Term> terms;
  terms.reserve(f.size() * g.size());
  for (const auto& a : f.terms_) {
    for (const auto& b : g.terms_) terms.push_back({a.mono * b.mono, k.mul(a.coeff, b.coeff)});
  }
  return Polynomial(ring, std::move(terms));
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial Polynomial::scaled(const Scalar& c) const {
  return times(Monomial{}, c);
}

Polynomial Polynomial::times(const Monomial& m, const Scalar& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, ring_->field().mul(t.coeff, c)});
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const Field& k = ring_->field();
  std::string out;
  for (const auto& t : terms_) {
    bool negative = k.is_negative(t.coeff);
    Scalar mag = negative ? k.neg(t.coeff) : t.coeff;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += k.to_string(mag);
    } else {
      if (!k.is_one(mag)) out += k.to_string(mag) + '*';
      out += ring_->mono_to_string(t.mono);
    }
  }
  return out;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i) {
    if (!(f.terms_[i].mono == g.terms_[i].mono) || !(f.terms_[i].coeff == g.terms_[i].coeff)) return false;
  }
  return true;
}

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    for (;;) {
      Term t = term();
      if (negative) t.coeff = ring_->field().neg(t.coeff);
      terms.push_back(std::move(t));
      skip_ws();
      if (pos_ == text_.size()) break;
      char c = text_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      negative = c == '-';
      ++pos_;
    }
    return Polynomial(ring_, std::move(terms));
  }

 private:
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what, ParseError::Kind kind = ParseError::Kind::Syntax) {
    throw ParseError(kind, what + " in \"" + std::string(text_) + "\"", 1, pos_ + 1);
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Term term() {
    const Field& k = ring_->field();
    Term t{Monomial{}, k.one()};
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t at = pos_;
      std::string num = digits();
      if (peek() == '/') {
        ++pos_;
        std::string den = digits();
        if (!k.is_rational()) {
          pos_ = at;
          fail("fractional coefficients need characteristic 0");
        }
        num += "/" + den;
      }
      t.coeff = k.from_string(num);
      if (peek() != '*') return t;
      ++pos_;
    }
    for (;;) {
      t.mono = t.mono * factor();
      if (peek() != '*') break;
      ++pos_;
    }
    return t;
  }

  Monomial factor() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_') &&
           (pos_ > start || !std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
      ++pos_;
    }
    if (start == pos_) fail("expected a variable");
    std::string_view name = text_.substr(start, pos_ - start);
    auto idx = ring_->variable_index(name);
    if (!idx) {
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'", ParseError::Kind::UnknownVariable);
    }
    int power = 1;
    if (peek() == '^') {
      ++pos_;
      std::string d = digits();
      if (d.size() > 5 || std::stol(d) > 0xffff) fail("exponent too large");
      power = std::stoi(d);
    }
    return Monomial::variable(*idx, power);
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  return PolyParser(ring, text).parse();
}

}  // namespace gradex
