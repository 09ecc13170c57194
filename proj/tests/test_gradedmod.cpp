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
#include "gradex/gradedmod.hpp"
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

GradedMap matrix_map(const RingPtr& R, std::vector<int> src, std::vector<int> tgt,
                     std::vector<std::vector<const char*>> rows) {
  std::vector<std::vector<Polynomial>> entries;
  for (auto& row : rows) {
    entries.emplace_back();
    for (auto e : row) entries.back().push_back(P(R, e));
  }
  return GradedMap::from_matrix(R, {std::move(src)}, {std::move(tgt)}, entries);
}

bool same_dims(const Presentation& A, const Presentation& B, int lo, int hi) {
  for (int d = lo; d <= hi; ++d) {
    if (oracle::piece_dim(A, d) != oracle::piece_dim(B, d)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("kernel examples") {
  auto R = make_ring(kDefaultPrime, {"x", "y"});
  auto K = kernel(matrix_map(R, {1, 1}, {0}, {{"x", "y"}}));
  REQUIRE(K.columns().size() == 1);
  CHECK(K.source().twists == std::vector<int>{2});
  auto c0 = K.columns()[0].component(R, 0), c1 = K.columns()[0].component(R, 1);
  CHECK(c0 * P(R, "x") + c1 * P(R, "y") == Polynomial(R));
  CHECK(c0.degree() == 1);

  auto Z = kernel(GradedMap::zero(R, {{0, 1}}, {{0}}));
  CHECK(oracle::rank([&] {
          std::vector<oracle::Vec> rows;
          oracle::Strand S(2, {0, 1}, 1);
          for (const auto& c : Z.columns()) {
            if (c.degree(std::vector<int>{0, 1}).value() != 1) continue;
            oracle::Vec v(S.size(), 0);
            for (std::size_t k = 0; k < 2; ++k) S.add(v, k, oracle::Exps(2, 0), c.component(R, k), 1);
            rows.push_back(v);
          }
          for (auto& ex : oracle::monomials(2, 1)) {
            oracle::Vec v(S.size(), 0);
            S.add(v, 0, ex, P(R, "1"), 1);
            rows.push_back(v);
          }
          return rows;
        }()) == 3);  // degree-1 piece of the kernel is all of (R + R(-1))_1
  CHECK(kernel(matrix_map(R, {1}, {0}, {{"x"}})).columns().empty());
}

TEST_CASE("minimalize examples") {
  auto R = make_ring(kDefaultPrime, {"x", "y"});
  auto unit = Presentation{matrix_map(R, {0}, {0}, {{"1"}})};
  auto m = minimalize(unit);
  CHECK(m.generators().rank() == 0);
  CHECK(is_zero_module(m));

  auto P2 = Presentation{matrix_map(R, {1, 0}, {0, -1}, {{"x", "1"}, {"0", "y"}})};
  auto m2 = minimalize(P2);
  CHECK(m2.generators().rank() == 1);
  CHECK(same_dims(P2, m2, -2, 5));
  CHECK(m2.map.is_minimal());

  auto k = residue_field(R);
  auto mk = minimalize(k);
  CHECK(minimalize(mk).map.matrix() == mk.map.matrix());
  CHECK(minimalize(mk).generators() == mk.generators());
}

TEST_CASE("indeg examples") {
  auto R = make_ring(kDefaultPrime, {"x", "y"});
  CHECK(indeg(free_module(R, {2, -1})) == ExtInt(-1));
  CHECK(indeg(residue_field(R)) == ExtInt(0));
  CHECK(indeg(Presentation{matrix_map(R, {0}, {0}, {{"1"}})}).is_pos_inf());
}

TEST_CASE("hilbert series examples") {
  auto R2 = make_ring(kDefaultPrime, {"x", "y"});
  auto h = hilbert_series(quotient(R2, {"x*y"}));
  CHECK(h == HilbertNumerator::normalized(0, {1, 0, -1}));
  CHECK(krull_dim(quotient(R2, {"x*y"})) == ExtInt(1));

  auto R3 = make_ring(kDefaultPrime, {"x", "y", "z"});
  CHECK(hilbert_series(quotient(R3, {"x*z - y^2"})) == HilbertNumerator::normalized(0, {1, 0, -1}));
  CHECK(krull_dim(quotient(R3, {"x*z - y^2"})) == ExtInt(2));

  auto m2 = quotient(R2, {"x^2", "x*y", "y^2"});
  CHECK(hilbert_series(m2) == HilbertNumerator::normalized(0, {1, 0, -3, 2}));
  CHECK(krull_dim(m2) == ExtInt(0));
  long long total = 0;
  for (int d = 0; d < 6; ++d) total += hilbert_function(hilbert_series(m2), 2, d);
  CHECK(total == 3);
  CHECK(end(m2) == ExtInt(1));
  CHECK(end(quotient(R2, {"x*y"})).is_pos_inf());
  auto zero = Presentation{matrix_map(R2, {0}, {0}, {{"1"}})};
  CHECK(krull_dim(zero).is_neg_inf());
  CHECK(end(zero).is_neg_inf());
}

TEST_CASE("graded piece examples") {
  auto R = make_ring(kDefaultPrime, {"x", "y"});
  CHECK(graded_piece_dim(free_module(R, {0}), 3) == 4);
  auto k = residue_field(R);
  CHECK(graded_piece_dim(k, 0) == 1);
  CHECK(graded_piece_dim(k, 1) == 0);
  CHECK(graded_piece_dim(k, -1) == 0);
  CHECK(graded_piece_dim(quotient(R, {"x^2", "x*y", "y^2"}), 1) == 2);
}

TEST_CASE("tensor examples") {
  auto R = make_ring(kDefaultPrime, {"x", "y"});
  auto M = quotient(R, {"x^2", "x*y"});
  CHECK(same_dims(tensor(M, free_module(R, {0})), M, -1, 6));
  auto k = residue_field(R);
  CHECK(same_dims(tensor(quotient(R, {"x"}), quotient(R, {"y"})), k, -1, 6));
  CHECK(same_dims(tensor(k, k), k, -1, 6));
}

TEST_CASE("Cohen-Macaulay examples") {
  auto R2 = make_ring(kDefaultPrime, {"x", "y"});
  auto R3 = make_ring(kDefaultPrime, {"x", "y", "z"});
  CHECK(is_cohen_macaulay(free_module(R3, {0})));
  CHECK(is_cohen_macaulay(quotient(R3, {"x*z - y^2"})));
  CHECK_FALSE(is_cohen_macaulay(quotient(R2, {"x^2", "x*y"})));
  CHECK_THROWS_AS(is_cohen_macaulay(Presentation{matrix_map(R2, {0}, {0}, {{"1"}})}), DomainError);
}

TEST_CASE("random presentations: piece dims, Hilbert series, minimalize, tensor with k") {
  std::mt19937_64 rng(31);
  for (int n = 2; n <= 3; ++n) {
    std::vector<std::string> vars{"x", "y", "z"};
    vars.resize(n);
    auto R = make_ring(kDefaultPrime, vars);
    auto k = residue_field(R);
    for (int it = 0; it < 12; ++it) {
      auto M = oracle::random_presentation(R, rng, 2, 3, 3);
      auto h = hilbert_series(M);
      auto mM = minimalize(M);
      ExtInt lo = indeg(M);
      int start = lo.is_finite() ? static_cast<int>(lo.value()) : 0;
      for (int d = start - 1; d <= start + 10; ++d) {
        auto ref = oracle::piece_dim(M, d);
        CHECK(graded_piece_dim(M, d) == ref);
        CHECK(hilbert_function(h, n, d) == static_cast<long long>(ref));
        CHECK(oracle::piece_dim(mM, d) == ref);
      }
      CHECK(mM.map.is_minimal());
      auto mm = minimalize(mM);
      CHECK(mm.generators() == mM.generators());
      CHECK(mm.map.source() == mM.map.source());
      // M (x) k has one basis vector per minimal generator
      auto Mk = tensor(M, k);
      for (int d = start - 1; d <= start + 4; ++d) {
        std::uint64_t gens = 0;
        for (int e : mM.generators().twists) gens += e == d;
        CHECK(graded_piece_dim(Mk, d) == gens);
      }
    }
  }
}

TEST_CASE("end of Hom from a free module") {
  auto R = make_ring(kDefaultPrime, {"x", "y"});
  auto Q = quotient(R, {"x^2", "x*y", "y^3"});
  REQUIRE(end(Q) == ExtInt(2));
  for (std::vector<int> tw : {std::vector<int>{0}, {2, -1}, {3, 3, 1}}) {
    auto F = free_module(R, tw);
    // Hom(F, Q) = (+) Q(e_i); find its top degree with the oracle
    int top = -100;
    for (int mu = -10; mu <= 10; ++mu) {
      if (oracle::hom_dim(F, Q, mu) != 0) top = mu;
    }
    CHECK(ExtInt(top) == end(Q) - indeg(F));
    Presentation H = twist(Q, tw[0]);
    for (std::size_t i = 1; i < tw.size(); ++i) H = direct_sum(H, twist(Q, tw[i]));
    CHECK(end(H) == end(Q) - indeg(F));
  }
}
