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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "gradex/error.hpp"
#include "gradex/resolve.hpp"
#include "oracle.hpp"

using namespace gradex;
namespace fs = std::filesystem;

namespace {

Polynomial P(const RingPtr& R, const char* s) { return parse_polynomial(R, s); }

Presentation quotient(const RingPtr& R, std::vector<const char*> gens) {
  std::vector<Polynomial> fs;
  for (auto g : gens) fs.push_back(P(R, g));
  return cyclic_module(R, fs);
}

Presentation first_vars(const RingPtr& R, std::size_t k) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < k; ++i) vars.push_back(Polynomial::variable(R, i));
  return cyclic_module(R, vars);
}

RingPtr ring(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
  return make_ring(kDefaultPrime, v);
}

// dim of the image of phi in degree d
std::size_t image_rank(const GradedMap& phi, int d) {
  std::size_t n = phi.ring()->nvars();
  oracle::Strand T(n, phi.target().twists, d);
  std::vector<oracle::Vec> rows;
  for (std::size_t c = 0; c < phi.columns().size(); ++c) {
    for (auto& m : oracle::monomials(n, d - phi.source().twists[c])) {
      oracle::Vec v(T.size(), 0);
      for (std::size_t k = 0; k < phi.target().rank(); ++k) T.add(v, k, m, phi.columns()[c].component(phi.ring(), k), 1);
      rows.push_back(std::move(v));
    }
  }
  return oracle::rank(rows);
}

std::size_t free_dim(std::size_t n, const std::vector<int>& tw, int d) { return oracle::Strand(n, tw, d).size(); }

// Exactness, minimality and the augmentation, degree by degree.
void check_resolution(const Presentation& M, const Resolution& res, int lo, int hi) {
  std::size_t n = M.ring()->nvars();
  if (res.is_zero_module()) {
    for (int d = lo; d <= hi; ++d) CHECK(oracle::piece_dim(M, d) == 0);
    return;
  }
  CHECK(res.length() <= n);
  for (const auto& map : res.maps) CHECK(map.is_minimal());
  for (std::size_t i = 0; i + 1 < res.maps.size(); ++i) CHECK(res.maps[i].compose(res.maps[i + 1]).is_zero());
  for (int d = lo; d <= hi; ++d) {
    std::size_t im1 = res.maps.empty() ? 0 : image_rank(res.maps[0], d);
    CHECK(free_dim(n, res.modules[0].twists, d) - im1 == oracle::piece_dim(M, d));
    for (std::size_t i = 0; i < res.maps.size(); ++i) {
      std::size_t ker = free_dim(n, res.modules[i + 1].twists, d) - image_rank(res.maps[i], d);
      std::size_t next = i + 1 < res.maps.size() ? image_rank(res.maps[i + 1], d) : 0;
      CHECK(ker == next);
    }
  }
}

std::map<std::pair<int, int>, int> koszul_betti(const Presentation& M, int jlo, int jhi) {
  std::map<std::pair<int, int>, int> out;
  int n = static_cast<int>(M.ring()->nvars());
  for (int i = 0; i <= n; ++i) {
    for (int j = jlo; j <= jhi; ++j) {
      if (auto b = oracle::koszul_tor(M, i, j)) out[{i, j}] = static_cast<int>(b);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("resolution examples") {
  auto R = make_ring(kDefaultPrime, {"x", "y"});
  auto k = quotient(R, {"x", "y"});
  auto res = minimal_free_resolution(k);
  REQUIRE(res.modules.size() == 3);
  CHECK(res.modules[0].twists == std::vector<int>{0});
  CHECK(res.modules[1].twists == std::vector<int>{1, 1});
  CHECK(res.modules[2].twists == std::vector<int>{2});
  check_resolution(k, res, -1, 5);

  auto m2 = quotient(R, {"x^2", "x*y", "y^2"});
  auto r2 = minimal_free_resolution(m2);
  REQUIRE(r2.modules.size() == 3);
  CHECK(r2.modules[1].twists == std::vector<int>{2, 2, 2});
  CHECK(r2.modules[2].twists == std::vector<int>{3, 3});
  check_resolution(m2, r2, -1, 6);

  CHECK(minimal_free_resolution(free_module(R, {0})).length() == 0);
}

TEST_CASE("Betti examples") {
  auto R = make_ring(kDefaultPrime, {"x", "y"});
  using E = std::map<std::pair<int, int>, int>;
  CHECK(betti(quotient(R, {"x", "y"})).entries() == E{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}});
  CHECK(betti(quotient(R, {"x^2", "x*y", "y^2"})).entries() == E{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}});
  auto S = make_ring(kDefaultPrime, {"x", "y", "z", "w"});
  auto cubic = quotient(S, {"x*z - y^2", "x*w - y*z", "y*w - z^2"});
  auto b = betti(cubic);
  CHECK(b.entries() == E{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}});
  CHECK(b.entries() == koszul_betti(cubic, -1, 6));
  check_resolution(cubic, minimal_free_resolution(cubic), 0, 5);
}

TEST_CASE("reg and pdim examples") {
  auto R = make_ring(kDefaultPrime, {"x", "y"});
  CHECK(reg(free_module(R, {0})) == ExtInt(0));
  CHECK(reg(quotient(R, {"x^2", "x*y", "y^2"})) == ExtInt(1));
  for (int a : {-2, 0, 3}) CHECK(reg(free_module(R, {a})) == ExtInt(a));
  auto zero = quotient(R, {"1"});
  CHECK(reg(zero).is_neg_inf());
  CHECK_THROWS_AS(pdim(zero), DomainError);
  CHECK(pdim(free_module(R, {0})) == 0);
  CHECK(pdim(quotient(R, {"x^2", "x*y"})) == 2);
  for (std::size_t n = 1; n <= 4; ++n) CHECK(pdim(first_vars(ring(n), n)) == static_cast<int>(n));
}

TEST_CASE("Koszul complexes have binomial Betti numbers") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto R = ring(n);
    for (std::size_t k = 1; k <= n; ++k) {
      auto b = betti(first_vars(R, k));
      std::map<std::pair<int, int>, int> expect;
      for (std::size_t i = 0; i <= k; ++i) expect[{int(i), int(i)}] = int(oracle::binomial(int(k), int(i)));
      CHECK(b.entries() == expect);
    }
    CHECK(reg(first_vars(R, n)) == ExtInt(0));
  }
}

TEST_CASE("random modules: Betti tables against Koszul homology, exactness and Hilbert consistency") {
  std::mt19937_64 rng(37);
  int deep = 0;  // modules with pdim >= 2, so the test is not vacuous
  for (int n = 2; n <= 3; ++n) {
    auto R = ring(n);
    for (int it = 0; it < 25; ++it) {
      auto M = oracle::random_presentation(R, rng, 2, 4, 3);
      auto res = minimal_free_resolution(M);
      auto b = betti(M);
      int hi = 0;
      for (const auto& [ij, _] : b.entries()) hi = std::max(hi, ij.second);
      CHECK(b.entries() == koszul_betti(M, -1, hi + 2));
      check_resolution(M, res, -1, hi + 1);
      // sum_i (-1)^i beta_{i,j} t^j is the Hilbert numerator
      std::map<int, long long> alt;
      for (const auto& [ij, v] : b.entries()) alt[ij.second] += (ij.first % 2 ? -v : v);
      auto h = hilbert_series(M);
      for (int j = -1; j <= hi + 2; ++j) CHECK(alt[j] == h.coefficient(j));
      if (!b.empty()) {
        deep += pdim(M) >= 2;
        CHECK(pdim(M) <= n);
        for (const auto& [ij, _] : b.entries()) {
          if (ij.first == 0) CHECK(reg(M) >= ExtInt(ij.second));
        }
      }
    }
  }
  CHECK(deep >= 15);
}

TEST_CASE("resolutions do not depend on worker count") {
  std::mt19937_64 rng(41);
  auto R = ring(4);
  for (int it = 0; it < 8; ++it) {
    auto M = oracle::random_presentation(R, rng, 2, 3, 2);
    auto a = compute_resolution(M, 1), b = compute_resolution(M, 4);
    CHECK(a == b);
    CHECK(serialize_resolution(a) == serialize_resolution(b));
  }
}

TEST_CASE("serialization round trip") {
  auto R = make_ring(kDefaultPrime, {"x", "y", "z", "w"});
  auto M = quotient(R, {"x*z - y^2", "x*w - y*z", "y*w - z^2"});
  auto res = minimal_free_resolution(M);
  auto text = serialize_resolution(res);
  auto back = deserialize_resolution(R, text);
  CHECK(back == res);
  CHECK(serialize_resolution(back) == text);
  CHECK_THROWS_AS(deserialize_resolution(R, "modules x\n"), ParseError);
  CHECK(canonical_text(M) == canonical_text(quotient(R, {"x*z - y^2", "x*w - y*z", "y*w - z^2"})));
}

TEST_CASE("on-disk cache") {
  fs::path dir = fs::temp_directory_path() / ("gradex-cache-test-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  ResolutionCache cache(dir);
  auto R = make_ring(kDefaultPrime, {"x", "y", "z"});
  auto M = quotient(R, {"x^2", "y*z", "x*z"});
  auto miss = cache.get(M);
  CHECK_FALSE(miss.resolution);
  CHECK_FALSE(miss.warning);

  auto res = compute_resolution(M);
  cache.put(M, res);
  auto path = cache.path_for(M);
  CHECK(path.extension() == ".res");
  std::string first;
  std::getline(std::ifstream(path) >> std::ws, first);
  CHECK(first == "gradexres 1");
  auto hit = cache.get(M);
  REQUIRE(hit.resolution);
  CHECK(*hit.resolution == res);
  CHECK(serialize_resolution(*hit.resolution) == serialize_resolution(res));

  {
    std::ifstream in(path);
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::ofstream(path, std::ios::trunc) << all.substr(0, all.size() / 2) << "garbage\n";
  }
  auto bad = cache.get(M);
  CHECK_FALSE(bad.resolution);
  CHECK(bad.warning);

  std::ofstream(path, std::ios::trunc) << "gradexres 2\nwhatever\n";
  auto old = cache.get(M);
  CHECK_FALSE(old.resolution);
  CHECK(old.warning);

  // a fresh put repairs the entry
  cache.put(M, res);
  CHECK(cache.get(M).resolution == std::optional<Resolution>(res));
  fs::remove_all(dir);
}
