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
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gradex/extint.hpp"
#include "gradex/gradedmod.hpp"

namespace gradex {

struct ExtModule {
  int j = 0;
  Presentation presentation;  ///< minimal
};

/// Ext^j_R(M,N) = H^j(Hom(F_M, N)) with Hom(R(-e), N) = N(e).
ExtModule ext_module(const Presentation& M, const Presentation& N, int j, unsigned workers = 1);
/// Ext^j for j = 0..pdim(M); empty when M = 0.
std::vector<Presentation> ext_modules(const Presentation& M, const Presentation& N, unsigned workers = 1);
/// Tor_i^R(M,N) = H_i(F_M (x) N).
Presentation tor_module(const Presentation& M, const Presentation& N, int i, unsigned workers = 1);

enum class CohomologyMethod { Duality, Colimit, Formula };
std::string method_name(CohomologyMethod m);

/// a_i(M,N) = end H^i_m(M,N) for i = 0..n, and reg_R(M,N) = max{a_i + i}.
struct CohomologyProfile {
  std::vector<ExtInt> a;
  ExtInt reg_gen = ExtInt::neg_inf();
  CohomologyMethod method = CohomologyMethod::Duality;

  /// -inf outside 0..n.
  ExtInt a_at(int i) const;
};

/// Graded local duality over R = k[x_1..x_n], omega_R = R(-n):
/// a_i(M,N) = -indeg Ext^{n-i}(N, M(-n)).
CohomologyProfile gencoh_duality(const Presentation& M, const Presentation& N, unsigned workers = 1);

/// reg(N) - indeg(M). Throws DomainError if either module is zero.
ExtInt reg_gen_formula(const Presentation& M, const Presentation& N);

struct ColimitResult {
  /// dim Ext^i(M/m^t M, N)_mu for t = 1, 2, ... as far as computed.
  std::vector<std::uint64_t> sequence;
  /// Plateau value; absent when no plateau was seen by t_max.
  std::optional<std::uint64_t> value;
  /// First t of the plateau.
  int stabilized_at = 0;
};

/// Truncated colimit lim_t Ext^i(M/m^t M, N)_mu. Caches Ext modules per t,
/// so many probes of one pair share the work. Safe to call concurrently.
class ColimitOracle {
 public:
  ColimitOracle(Presentation M, Presentation N, unsigned workers = 1);

  /// Stops at the first t where `plateau` consecutive values agree.
  ColimitResult piece(int i, int mu, int t_max, int plateau = 2);

 private:
  const std::vector<Presentation>& exts_at(int t);

  Presentation M_;
  Presentation N_;
  unsigned workers_;
  std::mutex mutex_;
  std::map<int, std::vector<Presentation>> exts_;
};

ColimitResult gencoh_colimit_piece(const Presentation& M, const Presentation& N, int i, int mu, int t_max,
                                   int plateau = 2);

}  // namespace gradex
