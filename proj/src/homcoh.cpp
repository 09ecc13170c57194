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

#include "gradex/homcoh.hpp"

#include <algorithm>

#include "gradex/error.hpp"
#include "gradex/resolve.hpp"

namespace gradex {

namespace {

// One term of a complex of presented modules: the cokernel of `rels`
// inside the free module with `twists`.
struct CxTerm {
  std::vector<int> twists;
  std::vector<ModuleVector> rels;
  std::vector<int> rel_twists;
};

// Differential between consecutive terms: columns indexed by the source
// free module, living in the target free module.
struct Differential {
  std::vector<ModuleVector> cols;
  std::vector<int> source_twists;
};

std::vector<ModuleVector> project(const std::vector<ModuleVector>& vs, std::uint32_t rank, const Field& k) {
  std::vector<ModuleVector> out;
  for (const auto& v : vs) {
    std::vector<ModTerm> terms;
    for (const auto& t : v.terms()) {
      if (t.comp < rank) terms.push_back(t);
    }
    ModuleVector p(k, std::move(terms));
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

std::vector<ModuleVector> shifted(const std::vector<ModuleVector>& vs, std::uint32_t by, const Field& k) {
  std::vector<ModuleVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) {
    std::vector<ModTerm> terms = v.terms();
    for (auto& t : terms) t.comp += by;
    out.emplace_back(k, std::move(terms));
  }
  return out;
}

// Kernel of the map (+) sources -> target given by concatenated columns.
std::vector<ModuleVector> kernel_of(const RingPtr& ring, const std::vector<int>& target,
                                    const std::vector<ModuleVector>& cols, const std::vector<int>& src,
                                    unsigned workers) {
  GradedMap phi(ring, {src}, {target}, cols);
  return kernel(phi, workers).columns();
}

// H(in -> here -> out) for presented terms.
Presentation homology(const RingPtr& ring, const CxTerm& here, const Differential* d_in, const Differential* d_out,
                      const CxTerm* out, unsigned workers) {
  const Field& k = ring->field();
  const auto h = static_cast<std::uint32_t>(here.twists.size());
  if (h == 0) return free_module(ring, {});

  // Cycles: h with d_out(h) in the relations of the next term.
  std::vector<ModuleVector> cycles;
  if (d_out && out) {
    std::vector<ModuleVector> cols = d_out->cols;
    std::vector<int> src = here.twists;
    cols.insert(cols.end(), out->rels.begin(), out->rels.end());
    src.insert(src.end(), out->rel_twists.begin(), out->rel_twists.end());
    cycles = project(kernel_of(ring, out->twists, cols, src, workers), h, k);
  } else {
    for (std::uint32_t i = 0; i < h; ++i) cycles.push_back(ModuleVector::unit(k, i));
  }
  if (cycles.empty()) return free_module(ring, {});
  std::vector<int> z_twists;
  for (const auto& z : cycles) z_twists.push_back(*z.degree(here.twists));

  // Relations among the cycles modulo boundaries and the term's relations.
  std::vector<ModuleVector> cols = cycles;
  std::vector<int> src = z_twists;
  if (d_in) {
    cols.insert(cols.end(), d_in->cols.begin(), d_in->cols.end());
    src.insert(src.end(), d_in->source_twists.begin(), d_in->source_twists.end());
  }
  cols.insert(cols.end(), here.rels.begin(), here.rels.end());
  src.insert(src.end(), here.rel_twists.begin(), here.rel_twists.end());
  auto rels = project(kernel_of(ring, here.twists, cols, src, workers), static_cast<std::uint32_t>(cycles.size()), k);
  return minimalize(cokernel(ring, z_twists, std::move(rels)));
}

// Hom(F_k, N) for all k, or F_k (x) N; `sign` is -1 for Hom and +1 for tensor.
CxTerm make_term(const GradedFreeModule& F, const Presentation& N, int sign, const Field& k) {
  CxTerm t;
  const auto& nt = N.generators().twists;
  const auto& nr = N.relations();
  const auto& nrt = N.map.source().twists;
  const auto h = static_cast<std::uint32_t>(nt.size());
  for (std::size_t b = 0; b < F.rank(); ++b) {
    for (int e : nt) t.twists.push_back(e + sign * F.twists[b]);
    auto block = shifted(nr, static_cast<std::uint32_t>(b) * h, k);
    for (std::size_t r = 0; r < nr.size(); ++r) {
      t.rels.push_back(std::move(block[r]));
      t.rel_twists.push_back(nrt[r] + sign * F.twists[b]);
    }
  }
  return t;
}

// phi : F_{k+1} -> F_k induces Hom(F_k,N) -> Hom(F_{k+1},N) (transpose) when
// `transpose`, and F_{k+1} (x) N -> F_k (x) N otherwise.
Differential make_differential(const GradedMap& phi, const CxTerm& source, std::uint32_t h, bool transpose,
                               const Field& k) {
  const std::size_t nsrc = transpose ? phi.target().rank() : phi.source().rank();
  std::vector<std::vector<std::vector<ModTerm>>> terms(nsrc, std::vector<std::vector<ModTerm>>(h));
  for (std::size_t bp = 0; bp < phi.source().rank(); ++bp) {
    for (const auto& t : phi.columns()[bp].terms()) {
      const std::size_t b = t.comp;
      const std::size_t from = transpose ? b : bp;
      const std::size_t to = transpose ? bp : b;
      for (std::uint32_t i = 0; i < h; ++i) {
        terms[from][i].push_back({t.mono, static_cast<std::uint32_t>(to * h + i), t.coeff});
      }
    }
  }
  Differential d;
  d.source_twists = source.twists;
  for (auto& per_b : terms) {
    for (auto& ts : per_b) d.cols.emplace_back(k, std::move(ts));
  }
  return d;
}

Presentation zero_module(const RingPtr& ring) { return free_module(ring, {}); }

void check_same_ring(const Presentation& M, const Presentation& N) {
  if (*M.ring() != *N.ring()) throw MismatchError("modules live over different rings");
}

}  // namespace

std::vector<Presentation> ext_modules(const Presentation& M, const Presentation& N, unsigned workers) {
  check_same_ring(M, N);
  const RingPtr& ring = M.ring();
  const Field& k = ring->field();
  Resolution res = minimal_free_resolution(M, workers);
  std::vector<Presentation> out;
  if (res.is_zero_module()) return out;
  Presentation Nm = minimalize(N);
  const auto h = static_cast<std::uint32_t>(Nm.generators().rank());
  std::vector<CxTerm> terms;
  for (const auto& F : res.modules) terms.push_back(make_term(F, Nm, -1, k));
  std::vector<Differential> d;  // d[k] : term k -> term k+1
  for (std::size_t q = 0; q < res.maps.size(); ++q) d.push_back(make_differential(res.maps[q], terms[q], h, true, k));
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const Differential* in = j > 0 ? &d[j - 1] : nullptr;
    const Differential* o = j < d.size() ? &d[j] : nullptr;
    const CxTerm* next = j + 1 < terms.size() ? &terms[j + 1] : nullptr;
    out.push_back(homology(ring, terms[j], in, o, next, workers));
  }
  return out;
}

ExtModule ext_module(const Presentation& M, const Presentation& N, int j, unsigned workers) {
  ExtModule out{j, zero_module(M.ring())};
  if (j < 0) return out;
  auto all = ext_modules(M, N, workers);
  if (static_cast<std::size_t>(j) < all.size()) out.presentation = std::move(all[static_cast<std::size_t>(j)]);
  return out;
}

Presentation tor_module(const Presentation& M, const Presentation& N, int i, unsigned workers) {
  check_same_ring(M, N);
  const RingPtr& ring = M.ring();
  const Field& k = ring->field();
  Resolution res = minimal_free_resolution(M, workers);
  if (i < 0 || res.is_zero_module() || static_cast<std::size_t>(i) > res.length()) return zero_module(ring);
  Presentation Nm = minimalize(N);
  const auto h = static_cast<std::uint32_t>(Nm.generators().rank());
  const auto ui = static_cast<std::size_t>(i);
  CxTerm here = make_term(res.modules[ui], Nm, +1, k);
  std::optional<CxTerm> below;
  std::optional<Differential> d_out, d_in;
  if (ui > 0) {
    below = make_term(res.modules[ui - 1], Nm, +1, k);
    d_out = make_differential(res.maps[ui - 1], here, h, false, k);
  }
  if (ui < res.length()) {
    CxTerm above = make_term(res.modules[ui + 1], Nm, +1, k);
    d_in = make_differential(res.maps[ui], above, h, false, k);
  }
  return homology(ring, here, d_in ? &*d_in : nullptr, d_out ? &*d_out : nullptr, below ? &*below : nullptr,
                  workers);
}

std::string method_name(CohomologyMethod m) {
  switch (m) {
    case CohomologyMethod::Duality:
      return "duality";
    case CohomologyMethod::Colimit:
      return "colimit";
    case CohomologyMethod::Formula:
      return "formula";
  }
  return "?";
}

ExtInt CohomologyProfile::a_at(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= a.size()) return ExtInt::neg_inf();
  return a[static_cast<std::size_t>(i)];
}

CohomologyProfile gencoh_duality(const Presentation& M, const Presentation& N, unsigned workers) {
  check_same_ring(M, N);
  const int n = static_cast<int>(M.ring()->nvars());
  CohomologyProfile prof;
  prof.method = CohomologyMethod::Duality;
  prof.a.assign(static_cast<std::size_t>(n) + 1, ExtInt::neg_inf());
  auto exts = ext_modules(N, twist(M, -n), workers);
  for (int i = 0; i <= n; ++i) {
    const auto j = static_cast<std::size_t>(n - i);
    if (j < exts.size()) prof.a[static_cast<std::size_t>(i)] = -indeg(exts[j]);
    prof.reg_gen = max(prof.reg_gen, prof.a[static_cast<std::size_t>(i)] + ExtInt(i));
  }
  return prof;
}

ExtInt reg_gen_formula(const Presentation& M, const Presentation& N) {
  if (is_zero_module(M) || is_zero_module(N)) throw DomainError("reg_R(M,N) formula needs nonzero modules");
  return reg(N) - indeg(M);
}

ColimitOracle::ColimitOracle(Presentation M, Presentation N, unsigned workers)
    : M_(std::move(M)), N_(std::move(N)), workers_(workers) {
  check_same_ring(M_, N_);
}

const std::vector<Presentation>& ColimitOracle::exts_at(int t) {
  auto it = exts_.find(t);
  if (it == exts_.end()) it = exts_.emplace(t, ext_modules(truncate_power(M_, t), N_, workers_)).first;
  return it->second;
}

ColimitResult ColimitOracle::piece(int i, int mu, int t_max, int plateau) {
  if (t_max < 1) throw DomainError("t_max must be positive");
  if (plateau < 1) throw DomainError("plateau length must be positive");
  std::lock_guard lock(mutex_);
  ColimitResult out;
  int run = 0;
  for (int t = 1; t <= t_max; ++t) {
    const auto& exts = exts_at(t);
    std::uint64_t v = 0;
    if (i >= 0 && static_cast<std::size_t>(i) < exts.size()) v = graded_piece_dim(exts[static_cast<std::size_t>(i)], mu);
    run = (!out.sequence.empty() && out.sequence.back() == v) ? run + 1 : 1;
    out.sequence.push_back(v);
    if (run >= plateau) {
      out.value = v;
      out.stabilized_at = t - plateau + 1;
      break;
    }
  }
  return out;
}

ColimitResult gencoh_colimit_piece(const Presentation& M, const Presentation& N, int i, int mu, int t_max,
                                   int plateau) {
  ColimitOracle oracle(M, N);
  return oracle.piece(i, mu, t_max, plateau);
}

}  // namespace gradex
