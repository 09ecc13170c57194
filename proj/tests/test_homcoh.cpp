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

#include <random>

#include "gradex/error.hpp"
#include "gradex/homcoh.hpp"
#include "gradex/resolve.hpp"
#include "oracle.hpp"

using namespace gradex;

namespace {

Polynomial P(const RingPtr& R, const char* s) { return parse_polynomial(R, s); }

Presentation quotient(const RingPtr& R, std::vector<const char*> gens) {
  std::vector<Polynomial> fs;
  for (auto g : gens) fs.push_back(P(R, g));
  return cyclic_module(R, fs);
}

Presentation residue_field(const RingPtr& R) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < R->nvars(); ++i) vars.push_back(Polynomial::variable(R, i));
  return cyclic_module(R, vars);
}

RingPtr ring(std::size_t n) {
  std::vector<std::string> v{"x", "y", "z", "w"};
  v.resize(n);
  return make_ring(kDefaultPrime, v);
}

// sum_{j,b} (-1)^j beta_{j,b}(M) dim N_{mu+b}: Euler characteristic of Hom(F_M, N)_mu
long long ext_euler(const Presentation& M, const Presentation& N, int mu) {
  long long s = 0;
  auto b = betti(M);
  for (const auto& [jb, v] : b.entries()) {
    s += (jb.first % 2 ? -1 : 1) * v * static_cast<long long>(oracle::piece_dim(N, mu + jb.second));
  }
  return s;
}

// Euler characteristic of (F_M (x) N)_mu
long long tor_euler(const Presentation& M, const Presentation& N, int mu) {
  long long s = 0;
  auto b = betti(M);
  for (const auto& [ib, v] : b.entries()) {
    s += (ib.first % 2 ? -1 : 1) * v * static_cast<long long>(oracle::piece_dim(N, mu - ib.second));
  }
  return s;
}

std::vector<ExtInt> neg_infs(std::size_t n) { return std::vector<ExtInt>(n + 1, ExtInt::neg_inf()); }

}  // namespace

TEST_CASE("Ext examples") {
  auto R = ring(2);
  auto N = quotient(R, {"x^2", "x*y"});
  auto e0 = ext_module(free_module(R, {0}), N, 0).presentation;
  for (int d = -1; d <= 6; ++d) CHECK(graded_piece_dim(e0, d) == oracle::piece_dim(N, d));

  auto Mx = quotient(R, {"x"}), Ny = quotient(R, {"y"});
  CHECK(is_zero_module(ext_module(Mx, Ny, 0).presentation));
  auto e1 = ext_module(Mx, Ny, 1).presentation;
  for (int d = -4; d <= 4; ++d) CHECK(graded_piece_dim(e1, d) == (d == -1 ? 1u : 0u));
  for (int d = -4; d <= 4; ++d) CHECK(oracle::hom_dim(Mx, Ny, d) == 0);

  for (std::size_t n = 1; n <= 4; ++n) {
    auto S = ring(n);
    auto en = ext_module(residue_field(S), free_module(S, {0}), static_cast<int>(n)).presentation;
    for (int d = -6; d <= 2; ++d) CHECK(graded_piece_dim(en, d) == (d == -static_cast<int>(n) ? 1u : 0u));
  }
}

TEST_CASE("Ext(k, N) against Koszul duality") {
  std::mt19937_64 rng(43);
  for (std::size_t n = 2; n <= 3; ++n) {
    auto R = ring(n);
    auto k = residue_field(R);
    for (int it = 0; it < 6; ++it) {
      auto N = oracle::random_presentation(R, rng, 2, 3, 3);
      for (int i = 0; i <= static_cast<int>(n); ++i) {
        auto E = ext_module(k, N, i).presentation;
        for (int mu = -5; mu <= 3; ++mu) {
          CHECK(graded_piece_dim(E, mu) == oracle::koszul_tor(N, static_cast<int>(n) - i, mu + static_cast<int>(n)));
        }
      }
    }
  }
}

TEST_CASE("random pairs: Hom pieces and Euler characteristics") {
  std::mt19937_64 rng(47);
  auto R = ring(3);
  for (int it = 0; it < 10; ++it) {
    auto M = oracle::random_presentation(R, rng, 2, 3, 2);
    auto N = oracle::random_presentation(R, rng, 2, 3, 2);
    auto exts = ext_modules(M, N);
    if (is_zero_module(M)) {
      CHECK(exts.empty());
      continue;
    }
    CHECK(exts.size() == static_cast<std::size_t>(pdim(M)) + 1);
    CHECK(is_zero_module(ext_module(M, N, pdim(M) + 1).presentation));
    for (int mu = -5; mu <= 3; ++mu) {
      CHECK(graded_piece_dim(exts[0], mu) == oracle::hom_dim(M, N, mu));
      long long alt = 0;
      for (std::size_t j = 0; j < exts.size(); ++j) alt += (j % 2 ? -1 : 1) * (long long)graded_piece_dim(exts[j], mu);
      CHECK(alt == ext_euler(M, N, mu));
    }
    for (int mu = -1; mu <= 7; ++mu) {
      long long alt = 0;
      for (int i = 0; i <= pdim(M); ++i) alt += (i % 2 ? -1 : 1) * (long long)graded_piece_dim(tor_module(M, N, i), mu);
      CHECK(alt == tor_euler(M, N, mu));
    }
    for (const auto& E : exts) {
      // minimal presentation: nothing below the generator degrees
      auto lo = indeg(E);
      if (lo.is_finite()) {
        CHECK(graded_piece_dim(E, static_cast<int>(lo.value()) - 1) == 0);
        CHECK(graded_piece_dim(E, static_cast<int>(lo.value())) > 0);
      }
    }
  }
}

TEST_CASE("Tor examples and symmetry") {
  auto R = ring(2);
  auto M = quotient(R, {"x^2", "x*y"});
  auto N = quotient(R, {"y^2"});
  auto t0 = tor_module(M, N, 0);
  auto MN = tensor(M, N);
  for (int d = -1; d <= 6; ++d) CHECK(graded_piece_dim(t0, d) == oracle::piece_dim(MN, d));
  for (int i = 1; i <= 2; ++i) CHECK(is_zero_module(tor_module(M, free_module(R, {0}), i)));

  auto Rx = quotient(R, {"x"});
  auto t1 = tor_module(Rx, Rx, 1);
  CHECK(indeg(t1) == ExtInt(1));
  for (int d = -1; d <= 6; ++d) CHECK(graded_piece_dim(t1, d) == oracle::piece_dim(Rx, d - 1));

  std::mt19937_64 rng(53);
  auto k = residue_field(R);
  for (int it = 0; it < 8; ++it) {
    auto A = oracle::random_presentation(R, rng, 2, 3, 2);
    auto B = oracle::random_presentation(R, rng, 2, 3, 2);
    for (int i = 0; i <= 2; ++i) {
      auto ab = tor_module(A, B, i), ba = tor_module(B, A, i), ak = tor_module(A, k, i);
      for (int d = -1; d <= 7; ++d) {
        CHECK(graded_piece_dim(ab, d) == graded_piece_dim(ba, d));
        CHECK(graded_piece_dim(ak, d) == oracle::koszul_tor(A, i, d));
      }
    }
  }
}

TEST_CASE("duality profiles") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto R = ring(n);
    auto prof = gencoh_duality(free_module(R, {0}), free_module(R, {0}));
    auto expect = neg_infs(n);
    expect[n] = ExtInt(-static_cast<int>(n));
    CHECK(prof.a == expect);
    CHECK(prof.reg_gen == ExtInt(0));
    CHECK(prof.a_at(static_cast<int>(n) + 1).is_neg_inf());
  }
  auto R1 = ring(1);
  auto k = residue_field(R1);
  auto kk = gencoh_duality(k, k);
  CHECK(kk.a == std::vector<ExtInt>{ExtInt(0), ExtInt(-1)});
  CHECK(kk.reg_gen == ExtInt(0));
  auto kR = gencoh_duality(k, free_module(R1, {0}));
  CHECK(kR.a == std::vector<ExtInt>{ExtInt::neg_inf(), ExtInt(-1)});
  CHECK(kR.reg_gen == ExtInt(0));
}

TEST_CASE("colimit examples") {
  auto R1 = ring(1);
  auto F = free_module(R1, {0});
  auto k = residue_field(R1);
  auto a = gencoh_colimit_piece(F, F, 1, -1, 8);
  REQUIRE(a.value);
  CHECK(*a.value == 1);
  for (auto v : a.sequence) CHECK(v == 1);
  auto b = gencoh_colimit_piece(k, k, 0, 0, 8);
  REQUIRE(b.value);
  CHECK(*b.value == 1);
  CHECK(b.stabilized_at == 1);
  for (int mu = -3; mu <= 3; ++mu) {
    auto c = gencoh_colimit_piece(k, F, 0, mu, 8);
    REQUIRE(c.value);
    CHECK(*c.value == 0);
  }
  // H^1_m(R) over k[x] is nonzero in every negative degree; with t_max = 2 and
  // a long plateau requirement the probe must report non-stabilization.
  auto d = gencoh_colimit_piece(F, F, 1, -3, 2, 3);
  CHECK_FALSE(d.value);
  CHECK(d.sequence.size() == 2);
}

TEST_CASE("regularity formula examples") {
  auto R = ring(2);
  auto F = free_module(R, {0});
  CHECK(reg_gen_formula(F, F) == ExtInt(0));
  CHECK(reg_gen_formula(free_module(R, {3}), F) == ExtInt(-3));
  CHECK(reg_gen_formula(residue_field(R), quotient(R, {"x^2", "x*y", "y^2"})) == ExtInt(1));
  CHECK_THROWS_AS(reg_gen_formula(quotient(R, {"1"}), F), DomainError);
}

TEST_CASE("random pairs: regularity identities and duality against the colimit") {
  std::mt19937_64 rng(59);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto R = ring(n);
    auto k = residue_field(R);
    for (int it = 0; it < 8; ++it) {
      auto M = oracle::random_presentation(R, rng, 2, 3, 2);
      auto N = oracle::random_presentation(R, rng, 2, 3, 2);
      if (is_zero_module(M) || is_zero_module(N)) continue;
      auto prof = gencoh_duality(M, N);
      auto formula = reg_gen_formula(M, N);
      CHECK(prof.reg_gen == formula);
      CHECK(prof.a.size() == n + 1);
      for (std::size_t i = 0; i < prof.a.size(); ++i) CHECK(prof.a[i] + ExtInt(int(i)) <= formula);
      CHECK(gencoh_duality(M, k).reg_gen == -indeg(M));
      CHECK(prof.reg_gen == reg(N) + gencoh_duality(M, k).reg_gen);
      if (krull_dim(tensor(M, N)) <= ExtInt(0)) {
        for (std::size_t i = 0; i < prof.a.size(); ++i) CHECK(prof.a[i] == end(ext_module(M, N, int(i)).presentation));
      }
      // colimit pieces where the truncation sequence is constant from t = 1
      ColimitOracle colim(M, N);
      auto bN = betti(N);
      int bmax = 0;
      for (const auto& [ij, _] : bN.entries()) bmax = std::max(bmax, ij.second);
      int safe = bmax - static_cast<int>(n) - static_cast<int>(indeg(M).value());
      auto Mn = twist(M, -static_cast<int>(n));
      for (int i = 0; i <= static_cast<int>(n); ++i) {
        auto dual = ext_module(N, Mn, static_cast<int>(n) - i).presentation;
        for (int mu = safe; mu <= safe + 1; ++mu) {
          auto c = colim.piece(i, mu, 8);
          REQUIRE(c.value);
          CHECK(*c.value == graded_piece_dim(dual, -mu));
        }
      }
    }
  }
}
