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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "gradex/error.hpp"
#include "gradex/polyring.hpp"
#include "oracle.hpp"

using namespace gradex;

namespace {

Polynomial P(const RingPtr& R, const char* s) { return parse_polynomial(R, s); }

Monomial M(std::vector<int> e) { return Monomial::from_exponents(e); }

// Textbook definition: a > b iff deg a > deg b, or equal degree and the last
// nonzero entry of a - b is negative.
int degrevlex_ref(const std::vector<int>& a, const std::vector<int>& b) {
  int da = 0, db = 0;
  for (int v : a) da += v;
  for (int v : b) db += v;
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] - b[i] < 0 ? 1 : -1;
  }
  return 0;
}

int sign(std::strong_ordering o) { return o == 0 ? 0 : (o > 0 ? 1 : -1); }

// Dense product keyed by exponent vectors.
std::map<oracle::Exps, std::uint64_t> dense(const Polynomial& f, std::size_t n) {
  std::map<oracle::Exps, std::uint64_t> out;
  for (const auto& t : f.terms()) out[oracle::exps_of(t.mono, n)] = t.coeff.residue();
  return out;
}

std::map<oracle::Exps, std::uint64_t> dense_mul(const Polynomial& f, const Polynomial& g, std::size_t n) {
  std::map<oracle::Exps, std::uint64_t> out;
  for (auto& [a, ca] : dense(f, n)) {
    for (auto& [b, cb] : dense(g, n)) {
      oracle::Exps e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = a[i] + b[i];
      out[e] = (out[e] + ca * cb) % oracle::kP;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TEST_CASE("degrevlex examples") {
  CHECK(mono_cmp(M({0, 2, 0}), M({1, 0, 1})) > 0);
  CHECK(mono_cmp(M({1, 0, 0}), M({0, 1, 0})) > 0);
  CHECK(mono_cmp(M({2, 1, 3}), M({2, 1, 3})) == 0);
}

TEST_CASE("degrevlex matches its definition, refines degree and is multiplicative") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 3000; ++it) {
    std::vector<int> a(4), b(4), c(4);
    for (int i = 0; i < 4; ++i) a[i] = rng() % 4, b[i] = rng() % 4, c[i] = rng() % 3;
    int ref = degrevlex_ref(a, b);
    CHECK(sign(mono_cmp(M(a), M(b))) == ref);
    CHECK(sign(mono_cmp(M(a) * M(c), M(b) * M(c))) == ref);
  }
}

TEST_CASE("products") {
  auto R = make_ring(kDefaultPrime, {"x", "y"});
  CHECK(P(R, "x + y") * P(R, "x - y") == P(R, "x^2 - y^2"));
  CHECK((P(R, "x^3 + 2*x*y^2") * Polynomial(R)).is_zero());
  auto R5 = make_ring(5, {"x"});
  CHECK(P(R5, "2*x") * P(R5, "3*x") == P(R5, "x^2"));
  auto S = make_ring(kDefaultPrime, {"x", "y"});
  CHECK_THROWS_AS(P(R, "x") * parse_polynomial(make_ring(7, {"x", "y"}), "x"), MismatchError);
  CHECK(P(R, "x") * P(S, "y") == P(R, "x*y"));
}

TEST_CASE("ring piece dimensions") {
  CHECK(graded_piece_dim_ring(3, 2) == 6);
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(graded_piece_dim_ring(n, 0) == 1);
    CHECK(graded_piece_dim_ring(n, -1) == 0);
    for (int d = 0; d <= 6; ++d) CHECK(graded_piece_dim_ring(n, d) == oracle::monomials(n, d).size());
  }
  CHECK(monomials_of_degree(3, 2).size() == 6);
}

TEST_CASE("ring axioms and products against dense convolution") {
  auto R = make_ring(kDefaultPrime, {"x", "y", "z"});
  std::mt19937_64 rng(9);
  for (int it = 0; it < 200; ++it) {
    int da = rng() % 4, db = rng() % 4;
    auto f = oracle::random_poly(R, da, 4, rng), g = oracle::random_poly(R, db, 4, rng);
    auto h = oracle::random_poly(R, db, 3, rng);
    CHECK(dense(f * g, 3) == dense_mul(f, g, 3));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f * g) * h == f * (g * h));
    CHECK((f + g) + h == f + (g + h));
    CHECK((f - f).is_zero());
    if (!f.is_zero() && !g.is_zero()) {
      CHECK((f * g).is_homogeneous());
      CHECK((f * g).degree() == da + db);
    }
  }
}

TEST_CASE("print then parse is the identity") {
  std::mt19937_64 rng(13);
  for (std::uint32_t p : {kDefaultPrime, 0u}) {
    auto R = make_ring(p, {"x", "y", "z", "t"});
    for (int it = 0; it < 200; ++it) {
      auto f = oracle::random_poly(R, rng() % 5, 5, rng);
      if (p == 0 && it % 3 == 0) f = f * P(R, "-7/3");
      CHECK(parse_polynomial(R, f.to_string()) == f);
    }
  }
  auto R = make_ring(kDefaultPrime, {"x", "y", "z", "t"});
  CHECK(P(R, "x^2*t - y^2*z").to_string() == "-y^2*z + x^2*t");
  CHECK(P(R, " - x*y + 3 * z^2 ").to_string() == "-x*y + 3*z^2");
}

TEST_CASE("parse errors carry a kind and column") {
  auto R = make_ring(kDefaultPrime, {"x", "y"});
  try {
    P(R, "x*w");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::UnknownVariable);
    CHECK(e.column() == 3);
  }
  try {
    P(R, "x + ");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::Syntax);
  }
  CHECK_THROWS_AS(P(R, "1/2*x"), ParseError);
  CHECK(P(make_ring(0, {"x"}), "1/2*x").to_string() == "1/2*x");
}

TEST_CASE("exponent overflow is detected") {
  CHECK_THROWS_AS(Monomial::variable(0, 60000) * Monomial::variable(0, 60000), DomainError);
  CHECK_THROWS_AS(Monomial::variable(0, 70000), DomainError);
}
