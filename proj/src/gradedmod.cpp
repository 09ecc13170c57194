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

#include "gradex/gradedmod.hpp"

#include <algorithm>
#include <sstream>

#include "gradex/error.hpp"
#include "gradex/linalg.hpp"
#include "gradex/resolve.hpp"

namespace gradex {

ExtInt GradedFreeModule::indeg() const {
  if (twists.empty()) return ExtInt::pos_inf();
  return *std::min_element(twists.begin(), twists.end());
}

// ---------------------------------------------------------------------------
// GradedMap

GradedMap::GradedMap(RingPtr ring, GradedFreeModule source, GradedFreeModule target, std::vector<ModuleVector> columns)
    : ring_(std::move(ring)), source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
  if (columns_.size() != source_.rank()) throw MismatchError("column count differs from source rank");
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    const auto& c = columns_[j];
    for (const auto& t : c.terms()) {
      if (t.comp >= target_.rank()) throw MismatchError("column entry beyond target rank");
      if (t.mono.degree() + target_.twists[t.comp] != source_.twists[j]) {
        throw DomainError("entry (" + std::to_string(t.comp) + "," + std::to_string(j) + ") is not homogeneous of degree " +
                          std::to_string(source_.twists[j] - target_.twists[t.comp]));
      }
    }
  }
}

GradedMap GradedMap::from_matrix(RingPtr ring, GradedFreeModule source, GradedFreeModule target,
                                 const std::vector<std::vector<Polynomial>>& entries) {
  if (entries.size() != target.rank()) throw MismatchError("matrix row count differs from target rank");
  std::vector<ModuleVector> cols;
  for (std::size_t j = 0; j < source.rank(); ++j) {
    std::vector<Polynomial> comps;
    for (const auto& row : entries) {
      if (row.size() != source.rank()) throw MismatchError("matrix column count differs from source rank");
      comps.push_back(row[j]);
    }
    cols.push_back(ModuleVector::from_polynomials(ring->field(), comps));
  }
  return GradedMap(std::move(ring), std::move(source), std::move(target), std::move(cols));
}

GradedMap GradedMap::zero(RingPtr ring, GradedFreeModule source, GradedFreeModule target) {
  std::vector<ModuleVector> cols(source.rank());
  return GradedMap(std::move(ring), std::move(source), std::move(target), std::move(cols));
}

GradedMap GradedMap::identity(RingPtr ring, GradedFreeModule module) {
  std::vector<ModuleVector> cols;
  for (std::size_t i = 0; i < module.rank(); ++i) {
    cols.push_back(ModuleVector::unit(ring->field(), static_cast<std::uint32_t>(i)));
  }
  return GradedMap(std::move(ring), module, module, std::move(cols));
}

Polynomial GradedMap::entry(std::size_t row, std::size_t col) const {
  return columns_.at(col).component(ring_, static_cast<std::uint32_t>(row));
}

std::vector<std::vector<Polynomial>> GradedMap::matrix() const {
  std::vector<std::vector<Polynomial>> out(target_.rank(), std::vector<Polynomial>(source_.rank(), Polynomial(ring_)));
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    auto comps = columns_[j].to_polynomials(ring_, target_.rank());
    for (std::size_t i = 0; i < comps.size(); ++i) out[i][j] = std::move(comps[i]);
  }
  return out;
}

GradedMap GradedMap::compose(const GradedMap& other) const {
  if (!(other.target_ == source_)) throw MismatchError("composition of maps with mismatched inner modules");
  const Field& k = ring_->field();
  std::vector<ModuleVector> cols;
  for (const auto& c : other.columns_) {
    std::vector<ModTerm> terms;
    for (const auto& t : c.terms()) {
      for (const auto& u : columns_[t.comp].terms()) terms.push_back({u.mono * t.mono, u.comp, k.mul(u.coeff, t.coeff)});
    }
    cols.emplace_back(k, std::move(terms));
  }
  return GradedMap(ring_, other.source_, target_, std::move(cols));
}

bool GradedMap::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const ModuleVector& c) { return c.is_zero(); });
}

bool GradedMap::is_minimal() const {
  for (const auto& c : columns_) {
    for (const auto& t : c.terms()) {
      if (t.mono.is_one()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Constructors

Presentation free_module(const RingPtr& ring, std::vector<int> twists) {
  return {GradedMap::zero(ring, {}, {std::move(twists)})};
}

Presentation cokernel(const RingPtr& ring, std::vector<int> target_twists, std::vector<ModuleVector> relations) {
  std::vector<int> src;
  std::vector<ModuleVector> cols;
  for (auto& r : relations) {
    if (r.is_zero()) continue;
    for (const auto& t : r.terms()) {
      if (t.comp >= target_twists.size()) throw MismatchError("relation entry beyond generator count");
    }
    if (!r.is_homogeneous(target_twists)) throw DomainError("non-homogeneous relation");
    src.push_back(*r.degree(target_twists));
    cols.push_back(std::move(r));
  }
  return {GradedMap(ring, {std::move(src)}, {std::move(target_twists)}, std::move(cols))};
}

Presentation cyclic_module(const RingPtr& ring, const std::vector<Polynomial>& ideal_gens) {
  std::vector<ModuleVector> rels;
  for (const auto& g : ideal_gens) {
    if (!g.is_homogeneous()) throw DomainError("non-homogeneous ideal generator " + g.to_string());
    rels.push_back(ModuleVector::from_polynomials(ring->field(), std::span<const Polynomial>(&g, 1)));
  }
  return cokernel(ring, {0}, std::move(rels));
}

Presentation twist(const Presentation& P, int a) {
  auto src = P.map.source().twists;
  auto tgt = P.map.target().twists;
  for (auto& e : src) e -= a;
  for (auto& e : tgt) e -= a;
  return {GradedMap(P.ring(), {std::move(src)}, {std::move(tgt)}, P.relations())};
}

namespace {

ModuleVector shift_components(const ModuleVector& v, std::uint32_t by, const Field& k) {
  std::vector<ModTerm> terms(v.terms().begin(), v.terms().end());
  for (auto& t : terms) t.comp += by;
  return ModuleVector(k, std::move(terms));
}

}  // namespace

Presentation direct_sum(const Presentation& P, const Presentation& Q) {
  const Field& k = P.ring()->field();
  auto tgt = P.generators().twists;
  tgt.insert(tgt.end(), Q.generators().twists.begin(), Q.generators().twists.end());
  auto src = P.map.source().twists;
  src.insert(src.end(), Q.map.source().twists.begin(), Q.map.source().twists.end());
  std::vector<ModuleVector> cols = P.relations();
  auto shift = static_cast<std::uint32_t>(P.generators().rank());
  for (const auto& c : Q.relations()) cols.push_back(shift_components(c, shift, k));
  return {GradedMap(P.ring(), {std::move(src)}, {std::move(tgt)}, std::move(cols))};
}

Presentation truncate_power(const Presentation& P, int t) {
  const Field& k = P.ring()->field();
  auto src = P.map.source().twists;
  auto cols = P.relations();
  auto monos = monomials_of_degree(P.ring()->nvars(), t);
  for (std::size_t i = 0; i < P.generators().rank(); ++i) {
    for (const auto& m : monos) {
      cols.emplace_back(k, std::vector<ModTerm>{{m, static_cast<std::uint32_t>(i), k.one()}});
      src.push_back(P.generators().twists[i] + t);
    }
  }
  return {GradedMap(P.ring(), {std::move(src)}, P.generators(), std::move(cols))};
}

// ---------------------------------------------------------------------------
// Kernel / minimalization

namespace {

/// Minimal generators among homogeneous vectors of F; zero vectors dropped.
std::vector<ModuleVector> minimal_subset(const RingPtr& ring, const std::vector<int>& twists,
                                         const std::vector<ModuleVector>& gens, unsigned workers = 1) {
  GbOptions opt;
  opt.select_minimal = true;
  opt.workers = workers;
  int top = 0;
  bool any = false;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    top = any ? std::max(top, *g.degree(twists)) : *g.degree(twists);
    any = true;
  }
  if (!any) return {};
  opt.degree_limit = top;
  GroebnerBasis G = buchberger(ring, twists, gens, opt);
  std::vector<ModuleVector> out;
  for (std::size_t j : G.minimal) out.push_back(gens[j]);
  return out;
}

}  // namespace

GradedMap kernel(const GradedMap& phi, unsigned workers) {
  const RingPtr& ring = phi.ring();
  auto gens = kernel_generators(ring, phi.target().twists, phi.columns(), phi.source().twists, workers);
  auto mins = minimal_subset(ring, phi.source().twists, gens, workers);
  std::vector<int> src;
  for (const auto& g : mins) src.push_back(*g.degree(phi.source().twists));
  return GradedMap(ring, {std::move(src)}, phi.source(), std::move(mins));
}

Presentation minimalize(const Presentation& P) {
  const RingPtr& ring = P.ring();
  const Field& k = ring->field();
  std::vector<int> tw = P.generators().twists;
  std::vector<ModuleVector> cols;
  for (const auto& c : P.relations()) {
    if (!c.is_zero()) cols.push_back(c);
  }

  // Prune unit entries: a constant c in column j, row i expresses generator i
  // through the others.
  for (;;) {
    std::optional<std::size_t> pj;
    const ModTerm* pivot_term = nullptr;
    for (std::size_t j = 0; j < cols.size() && !pj; ++j) {
      for (const auto& t : cols[j].terms()) {
        if (t.mono.is_one()) {
          pj = j;
          pivot_term = &t;
          break;
        }
      }
    }
    if (!pj) break;
    const std::uint32_t row = pivot_term->comp;
    const Scalar inv = k.inv(pivot_term->coeff);
    ModuleVector pivot = std::move(cols[*pj]);
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(*pj));
    std::vector<ModuleVector> next;
    next.reserve(cols.size());
    for (auto& c : cols) {
      std::vector<ModTerm> terms;
      std::vector<ModTerm> hits;
      for (const auto& t : c.terms()) {
        if (t.comp == row) hits.push_back(t);
      }
      if (!hits.empty()) {
        terms = c.terms();
        for (const auto& h : hits) {
          Scalar f = k.neg(k.mul(h.coeff, inv));
          for (const auto& u : pivot.terms()) terms.push_back({u.mono * h.mono, u.comp, k.mul(f, u.coeff)});
        }
      } else {
        terms = c.terms();
      }
      for (auto& t : terms) {
        if (t.comp > row) --t.comp;
      }
      ModuleVector v(k, std::move(terms));
      if (!v.is_zero()) next.push_back(std::move(v));
    }
    cols = std::move(next);
    tw.erase(tw.begin() + row);
  }

  cols = minimal_subset(ring, tw, cols);
  std::vector<int> src;
  for (const auto& c : cols) src.push_back(*c.degree(tw));
  return {GradedMap(ring, {std::move(src)}, {std::move(tw)}, std::move(cols))};
}

// ---------------------------------------------------------------------------
// Hilbert series

long long HilbertNumerator::coefficient(int exponent) const {
  int i = exponent - offset;
  if (i < 0 || i >= static_cast<int>(coeffs.size())) return 0;
  return coeffs[static_cast<std::size_t>(i)];
}

HilbertNumerator HilbertNumerator::normalized(int offset, std::vector<long long> coeffs) {
  std::size_t lo = 0;
  while (lo < coeffs.size() && coeffs[lo] == 0) ++lo;
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (lo >= coeffs.size()) return {};
  HilbertNumerator h;
  h.offset = offset + static_cast<int>(lo);
  h.coeffs.assign(coeffs.begin() + static_cast<std::ptrdiff_t>(lo), coeffs.end());
  return h;
}

std::string HilbertNumerator::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    long long c = coeffs[i];
    if (c == 0) continue;
    int e = offset + static_cast<int>(i);
    long long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << '*';
      out << 't';
      if (e != 1) out << '^' << e;
    }
  }
  return out.str();
}

namespace {

HilbertNumerator add(const HilbertNumerator& a, const HilbertNumerator& b, long long sign_b = 1) {
  if (a.is_zero() && b.is_zero()) return {};
  int lo = a.is_zero() ? b.offset : (b.is_zero() ? a.offset : std::min(a.offset, b.offset));
  int hi = lo;
  if (!a.is_zero()) hi = std::max(hi, a.offset + static_cast<int>(a.coeffs.size()));
  if (!b.is_zero()) hi = std::max(hi, b.offset + static_cast<int>(b.coeffs.size()));
  std::vector<long long> c(static_cast<std::size_t>(hi - lo), 0);
  for (int e = lo; e < hi; ++e) c[static_cast<std::size_t>(e - lo)] = a.coefficient(e) + sign_b * b.coefficient(e);
  return HilbertNumerator::normalized(lo, std::move(c));
}

HilbertNumerator shifted(HilbertNumerator h, int by) {
  if (!h.is_zero()) h.offset += by;
  return h;
}

HilbertNumerator one_minus_t_pow(int d) {
  std::vector<long long> c(static_cast<std::size_t>(d) + 1, 0);
  c[0] += 1;
  c[static_cast<std::size_t>(d)] -= 1;
  return HilbertNumerator::normalized(0, std::move(c));
}

HilbertNumerator multiply(const HilbertNumerator& a, const HilbertNumerator& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<long long> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return HilbertNumerator::normalized(a.offset + b.offset, std::move(c));
}

std::vector<Monomial> minimal_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return mono_cmp(a, b) < 0; });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

int support_size(const Monomial& m) {
  int s = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) s += m[i] > 0;
  return s;
}

}  // namespace

HilbertNumerator monomial_ideal_numerator(std::vector<Monomial> gens) {
  gens = minimal_monomials(std::move(gens));
  if (gens.empty()) return HilbertNumerator::normalized(0, {1});
  // Base case: pairwise coprime generators (a regular sequence).
  bool coprime = true;
  for (std::size_t a = 0; a < gens.size() && coprime; ++a) {
    for (std::size_t b = a + 1; b < gens.size() && coprime; ++b) coprime = gens[a].coprime(gens[b]);
  }
  if (coprime) {
    HilbertNumerator h = HilbertNumerator::normalized(0, {1});
    for (const auto& g : gens) h = multiply(h, one_minus_t_pow(g.degree()));
    return h;
  }
  // Pivot on the variable occurring in the most non-pure-power generators:
  // N(J) = N(J + (p)) + t^deg(p) N(J : p).
  std::array<int, kMaxVariables> count{};
  for (const auto& g : gens) {
    if (support_size(g) < 2) continue;
    for (std::size_t i = 0; i < kMaxVariables; ++i) count[i] += g[i] > 0;
  }
  std::size_t var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  int power = 0;
  for (const auto& g : gens) {
    if (support_size(g) >= 2 && g[var] > 0 && (power == 0 || g[var] < power)) power = g[var];
  }
  Monomial p = Monomial::variable(var, power);

  std::vector<Monomial> with_p = gens;
  with_p.push_back(p);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial q = g.lcm(p).quotient(p);
    colon.push_back(q);
  }
  return add(monomial_ideal_numerator(std::move(with_p)), shifted(monomial_ideal_numerator(std::move(colon)), power));
}

HilbertNumerator hilbert_series(const Presentation& P) {
  const auto& tw = P.generators().twists;
  std::vector<std::vector<Monomial>> leads(tw.size());
  if (!P.relations().empty()) {
    GroebnerBasis G = buchberger(P.ring(), tw, P.relations());
    for (const auto& g : G.elements) leads[g.leading().comp].push_back(g.leading().mono);
  }
  HilbertNumerator h;
  for (std::size_t i = 0; i < tw.size(); ++i) h = add(h, shifted(monomial_ideal_numerator(leads[i]), tw[i]));
  return h;
}

ExtInt krull_dim(const HilbertNumerator& h, std::size_t nvars) {
  if (h.is_zero()) return ExtInt::neg_inf();
  std::vector<long long> c = h.coeffs;
  long long k = 0;
  for (;;) {
    long long sum = 0;
    for (auto v : c) sum += v;
    if (sum != 0) break;
    // c = (1-t) q.
    std::vector<long long> q(c.size() - 1);
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      acc += c[i];
      q[i] = acc;
    }
    c = std::move(q);
    ++k;
  }
  return static_cast<long long>(nvars) - k;
}

ExtInt krull_dim(const Presentation& P) { return krull_dim(hilbert_series(P), P.ring()->nvars()); }

long long hilbert_function(const HilbertNumerator& h, std::size_t nvars, int d) {
  long long total = 0;
  for (std::size_t i = 0; i < h.coeffs.size(); ++i) {
    int e = h.offset + static_cast<int>(i);
    total += h.coeffs[i] * static_cast<long long>(graded_piece_dim_ring(nvars, d - e));
  }
  return total;
}

std::uint64_t graded_piece_dim(const Presentation& P, int d) {
  const RingPtr& ring = P.ring();
  const std::size_t n = ring->nvars();
  const auto& tw = P.generators().twists;
  BasisIndexer basis;
  for (std::size_t i = 0; i < tw.size(); ++i) {
    for (const auto& m : monomials_of_degree(n, d - tw[i])) basis.index_of(m, static_cast<std::uint32_t>(i));
  }
  SparseEliminator elim(ring->field());
  for (std::size_t j = 0; j < P.relations().size(); ++j) {
    const auto& c = P.relations()[j];
    int deg = P.map.source().twists[j];
    for (const auto& m : monomials_of_degree(n, d - deg)) {
      SparseRow row;
      for (const auto& t : c.terms()) row.push_back({basis.index_of(t.mono * m, t.comp), t.coeff});
      elim.insert(std::move(row));
    }
  }
  return basis.size() - elim.rank();
}

ExtInt indeg(const Presentation& P) { return minimalize(P).generators().indeg(); }

bool is_zero_module(const Presentation& P) { return minimalize(P).generators().rank() == 0; }

ExtInt end(const Presentation& P) {
  HilbertNumerator h = hilbert_series(P);
  const std::size_t n = P.ring()->nvars();
  ExtInt dim = krull_dim(h, n);
  if (dim.is_neg_inf()) return ExtInt::neg_inf();
  if (dim.value() > 0) return ExtInt::pos_inf();
  std::vector<long long> c = h.coeffs;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<long long> q(c.size() - 1);
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      acc += c[i];
      q[i] = acc;
    }
    c = std::move(q);
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return static_cast<long long>(h.offset) + static_cast<long long>(c.size()) - 1;
}

Presentation tensor(const Presentation& P, const Presentation& Q) {
  const RingPtr& ring = P.ring();
  if (!(*ring == *Q.ring())) throw MismatchError("tensor of modules over different rings");
  const Field& k = ring->field();
  const auto& f = P.generators().twists;
  const auto& g = Q.generators().twists;
  const auto gr = static_cast<std::uint32_t>(g.size());
  std::vector<int> tgt;
  for (int a : f) {
    for (int b : g) tgt.push_back(a + b);
  }
  std::vector<ModuleVector> rels;
  for (const auto& r : P.relations()) {
    for (std::uint32_t b = 0; b < gr; ++b) {
      std::vector<ModTerm> terms;
      for (const auto& t : r.terms()) terms.push_back({t.mono, t.comp * gr + b, t.coeff});
      rels.emplace_back(k, std::move(terms));
    }
  }
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    for (const auto& s : Q.relations()) {
      std::vector<ModTerm> terms;
      for (const auto& t : s.terms()) terms.push_back({t.mono, a * gr + t.comp, t.coeff});
      rels.emplace_back(k, std::move(terms));
    }
  }
  return cokernel(ring, std::move(tgt), std::move(rels));
}

bool is_cohen_macaulay(const Presentation& P) {
  ExtInt dim = krull_dim(P);
  if (dim.is_neg_inf()) throw DomainError("Cohen-Macaulay test on the zero module");
  return pdim(P) + dim.value() == static_cast<long long>(P.ring()->nvars());
}

GradedModuleInvariants invariants(const Presentation& P) {
  GradedModuleInvariants inv;
  inv.hilbert_numerator = hilbert_series(P);
  inv.krull_dim = krull_dim(inv.hilbert_numerator, P.ring()->nvars());
  inv.indeg = indeg(P);
  inv.end = end(P);
  if (!inv.krull_dim.is_neg_inf()) inv.is_cm = is_cohen_macaulay(P);
  return inv;
}

}  // namespace gradex
