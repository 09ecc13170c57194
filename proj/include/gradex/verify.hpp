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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gradex/gradedmod.hpp"

namespace gradex {

enum class Verdict { Pass, Fail, HypothesesNotMet, Skipped };
std::string verdict_name(Verdict v);

struct HypothesisResult {
  std::string name;
  bool holds = false;
  std::string detail;  ///< computed values, or the construction argument
};

struct TheoremCheck {
  std::string id;
  std::string fixture;
  std::vector<HypothesisResult> hypothesis_report;
  nlohmann::json lhs;
  nlohmann::json rhs;
  Verdict verdict = Verdict::Skipped;
  std::string note;
  double wall_ms = 0;

  nlohmann::json to_json() const;
};

/// A pair of modules with metadata used by the checks.
struct Fixture {
  std::string id;
  Presentation M;
  Presentation N;
  /// Why hypotheses that cannot be decided here hold (empty if none claimed).
  std::string construction;
  /// Codimension c and exceptional dimension e for the checks that need them.
  std::optional<int> c;
  std::optional<int> e;
};

/// (i, mu) probe of H^i_m(M,N)_mu.
using Probe = std::pair<int, int>;

TheoremCheck check_cor3defs(const Fixture& fx);
TheoremCheck check_greg1(const Fixture& fx);
TheoremCheck check_greg3(const Fixture& fx);
TheoremCheck check_greg4(const Fixture& fx);
TheoremCheck check_greg5(const Fixture& fx);
TheoremCheck check_duality(const Fixture& fx, const std::vector<Probe>& probes, int t_max = 8, int plateau = 2);
TheoremCheck check_cavigliagen(const Fixture& fx);
TheoremCheck check_regextpi1(const Fixture& fx);
/// Needs fx.c and a construction argument for the punctual hypotheses.
TheoremCheck check_regextpi2(const Fixture& fx);
/// Needs fx.c, fx.e and a construction argument.
TheoremCheck check_reg2E(const Fixture& fx);
TheoremCheck check_apextc(const Fixture& fx);
TheoremCheck check_spread(const Fixture& fx);
TheoremCheck check_acm_ext(const std::string& fixture, const RingPtr& ring, const std::vector<Polynomial>& ideal);
/// I = (x^n t - y^n z) + (z,t)^n over F_32003[x,y,z,t]; reg Ext^2(R/I,R) + 2 vs (n-1)^2.
TheoremCheck check_minors(int nparam);
TheoremCheck fixture_piX();

/// a_i(P) = end H^i_m(P) via duality, i = 0..n.
std::vector<ExtInt> local_cohomology_ends(const Presentation& P);

struct CorpusSpec {
  enum class Suite { Paper, Random, Empty };
  Suite suite = Suite::Paper;
  std::uint64_t seed = 42;
  int pairs = 24;
  int max_vars = 3;
  int max_degree = 4;
  int max_rank = 2;
  int max_relations = 3;
  /// Probes per random pair for the duality check.
  int probes_per_pair = 2;
  unsigned workers = 1;
};

/// Deterministic random nonzero module pairs.
std::vector<Fixture> random_corpus(const CorpusSpec& spec);

struct SuiteReport {
  std::vector<TheoremCheck> checks;  ///< sorted by check id, then fixture id
  bool any_failure() const;
  /// with_timing = false drops wall_ms so runs can be compared.
  nlohmann::json to_json(bool with_timing = true) const;
};

SuiteReport run_suite(const CorpusSpec& spec);

}  // namespace gradex
