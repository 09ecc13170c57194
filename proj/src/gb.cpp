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

#include "gradex/gb.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <map>
#include <numeric>
#include <queue>
#include <thread>

#include "gradex/error.hpp"

namespace gradex {

// ---------------------------------------------------------------------------
// ModuleVector

namespace {

bool term_greater(const ModTerm& a, const ModTerm& b) {
  return module_cmp(a.mono, a.comp, b.mono, b.comp) > 0;
}

}  // namespace

ModuleVector::ModuleVector(const Field& field, std::vector<ModTerm> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().comp == t.comp && terms_.back().mono == t.mono) {
      terms_.back().coeff = field.add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

ModuleVector ModuleVector::unit(const Field& field, std::uint32_t comp) {
  ModuleVector v;
  v.terms_.push_back({Monomial{}, comp, field.one()});
  return v;
}

ModuleVector ModuleVector::from_polynomials(const Field& field, std::span<const Polynomial> components) {
  std::vector<ModTerm> terms;
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (const auto& t : components[i].terms()) terms.push_back({t.mono, static_cast<std::uint32_t>(i), t.coeff});
  }
  return ModuleVector(field, std::move(terms));
}

std::optional<int> ModuleVector::degree(std::span<const int> twists) const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().mono.degree() + twists[terms_.front().comp];
}

bool ModuleVector::is_homogeneous(std::span<const int> twists) const {
  for (const auto& t : terms_) {
    if (t.comp >= twists.size()) return false;
    if (t.mono.degree() + twists[t.comp] != *degree(twists)) return false;
  }
  return true;
}

Polynomial ModuleVector::component(const RingPtr& ring, std::uint32_t comp) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    if (t.comp == comp) terms.push_back({t.mono, t.coeff});
  }
  return Polynomial(ring, std::move(terms));
}

std::vector<Polynomial> ModuleVector::to_polynomials(const RingPtr& ring, std::size_t rank) const {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : terms_) {
    if (t.comp >= rank) throw MismatchError("module vector has a component beyond the free module rank");
    parts[t.comp].push_back({t.mono, t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(rank);
  for (auto& p : parts) out.emplace_back(ring, std::move(p));
  return out;
}

ModuleVector ModuleVector::scaled(const Field& field, const Monomial& m, const Scalar& c) const {
  ModuleVector r;
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.comp, field.mul(t.coeff, c)});
  return r;
}

ModuleVector ModuleVector::monic(const Field& field) const {
  if (terms_.empty() || field.is_one(terms_.front().coeff)) return *this;
  return scaled(field, Monomial{}, field.inv(terms_.front().coeff));
}

ModuleVector ModuleVector::axpy(const Field& field, const Scalar& c, const Monomial& m,
                                const ModuleVector& other) const {
  ModuleVector r;
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end()) {
      r.terms_.push_back(*a++);
      continue;
    }
    Monomial bm = b->mono * m;
    auto cmp = a == terms_.end() ? std::strong_ordering::less : module_cmp(a->mono, a->comp, bm, b->comp);
    if (cmp > 0) {
      r.terms_.push_back(*a++);
    } else if (cmp < 0) {
      Scalar v = field.mul(b->coeff, c);
      if (!v.is_zero()) r.terms_.push_back({bm, b->comp, v});
      ++b;
    } else {
      Scalar v = field.add(a->coeff, field.mul(b->coeff, c));
      if (!v.is_zero()) r.terms_.push_back({a->mono, a->comp, v});
      ++a;
      ++b;
    }
  }
  return r;
}

bool operator==(const ModuleVector& a, const ModuleVector& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& s = a.terms_[i];
    const auto& t = b.terms_[i];
    if (s.comp != t.comp || !(s.mono == t.mono) || !(s.coeff == t.coeff)) return false;
  }
  return true;
}

std::vector<int> GroebnerBasis::degrees() const {
  std::vector<int> out;
  out.reserve(elements.size());
  for (const auto& g : elements) out.push_back(*g.degree(twists));
  return out;
}

// ---------------------------------------------------------------------------
// Reduction machinery

namespace {

std::uint32_t divmask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (m[i] > 0) mask |= 1u << i;
    if (m[i] > 1) mask |= 1u << (16 + i);
  }
  return mask;
}

/// Leading-term lookup over a growing list of monic basis vectors.
class Reducer {
 public:
  explicit Reducer(std::size_t rank) : by_comp_(rank) {}

  void add(const ModuleVector* v) {
    const auto& lt = v->leading();
    if (lt.comp >= by_comp_.size()) by_comp_.resize(lt.comp + 1);
    by_comp_[lt.comp].push_back(vectors_.size());
    vectors_.push_back(v);
    masks_.push_back(divmask(lt.mono));
  }

  std::size_t size() const noexcept { return vectors_.size(); }
  const ModuleVector& at(std::size_t i) const { return *vectors_[i]; }

  /// First basis index below `limit` whose leading term divides mono*e_comp.
  std::optional<std::size_t> find(const Monomial& mono, std::uint32_t comp, std::size_t limit) const {
    if (comp >= by_comp_.size()) return std::nullopt;
    std::uint32_t mask = divmask(mono);
    for (std::size_t idx : by_comp_[comp]) {
      if (idx >= limit) break;
      if ((masks_[idx] & ~mask) != 0) continue;
      if (vectors_[idx]->leading().mono.divides(mono)) return idx;
    }
    return std::nullopt;
  }

 private:
  std::vector<const ModuleVector*> vectors_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::vector<std::size_t>> by_comp_;
};

/// coeff * mult * vec, read from term `pos` onward.
struct Stream {
  Scalar coeff;
  Monomial mult;
  const ModuleVector* vec;
  std::size_t pos;
};

/// remainder = (sum of start streams) - sum_q coeff*mult*basis[index].
struct QuotientTerm {
  Scalar coeff;
  Monomial mult;
  std::size_t index;
};

struct Reduction {
  ModuleVector remainder;
  std::vector<QuotientTerm> quotient;
};

struct HeapEntry {
  Monomial mono;
  std::uint32_t comp;
  std::size_t stream;
};

struct HeapLess {
  bool operator()(const HeapEntry& a, const HeapEntry& b) const {
    auto c = module_cmp(a.mono, a.comp, b.mono, b.comp);
    if (c != 0) return c < 0;
    return a.stream > b.stream;
  }
};

/// Full reduction (every term) of the sum of `start` by the basis elements
/// with index < limit. Heap-merged streams.
Reduction reduce(const Field& field, std::vector<Stream> streams, const Reducer& basis, std::size_t limit) {
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapLess> heap;
  auto push = [&](std::size_t s) {
    const Stream& st = streams[s];
    if (st.pos < st.vec->size()) {
      const ModTerm& t = st.vec->terms()[st.pos];
      heap.push({t.mono * st.mult, t.comp, s});
    }
  };
  for (std::size_t s = 0; s < streams.size(); ++s) push(s);

  Reduction out;
  std::vector<ModTerm> rem;
  while (!heap.empty()) {
    HeapEntry top = heap.top();
    heap.pop();
    Scalar sum;
    auto absorb = [&](const HeapEntry& e) {
      Stream& st = streams[e.stream];
      sum = field.add(sum, field.mul(st.coeff, st.vec->terms()[st.pos].coeff));
      ++st.pos;
      push(e.stream);
    };
    absorb(top);
    while (!heap.empty() && heap.top().comp == top.comp && heap.top().mono == top.mono) {
      HeapEntry e = heap.top();
      heap.pop();
      absorb(e);
    }
    if (sum.is_zero()) continue;
    if (auto g = basis.find(top.mono, top.comp, limit)) {
      const ModuleVector& gv = basis.at(*g);
      Monomial u = top.mono.quotient(gv.leading().mono);
      out.quotient.push_back({sum, u, *g});
      streams.push_back({field.neg(sum), u, &gv, 1});
      push(streams.size() - 1);
    } else {
      rem.push_back({top.mono, top.comp, sum});
    }
  }
  // Terms were emitted in strictly descending order with nonzero coefficients.
  out.remainder = ModuleVector(field, std::move(rem));
  return out;
}

/// sum_s coeff_s*mult_s*lift_s - sum_q coeff_q*mult_q*lifts[q].
ModuleVector combine_lifts(const Field& field, const std::vector<std::pair<Scalar, std::pair<Monomial, const ModuleVector*>>>& start,
                           const std::vector<QuotientTerm>& quotient, const std::vector<ModuleVector>& lifts) {
  std::vector<ModTerm> terms;
  for (const auto& [c, mv] : start) {
    for (const auto& t : mv.second->terms()) terms.push_back({t.mono * mv.first, t.comp, field.mul(c, t.coeff)});
  }
  for (const auto& q : quotient) {
    Scalar c = field.neg(q.coeff);
    for (const auto& t : lifts[q.index].terms()) terms.push_back({t.mono * q.mult, t.comp, field.mul(c, t.coeff)});
  }
  return ModuleVector(field, std::move(terms));
}

struct Pair {
  int degree;
  Monomial lcm;
  std::uint32_t comp;
  std::size_t i;
  std::size_t k;
};

bool pair_before(const Pair& a, const Pair& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  if (auto c = module_cmp(a.lcm, a.comp, b.lcm, b.comp); c != 0) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.k < b.k;
}

std::vector<Stream> spair_streams(const Field& field, const ModuleVector& gi, const ModuleVector& gk,
                                  const Monomial& lcm) {
  Monomial ui = lcm.quotient(gi.leading().mono);
  Monomial uk = lcm.quotient(gk.leading().mono);
  return {{field.one(), ui, &gi, 1}, {field.neg(field.one()), uk, &gk, 1}};
}

class BuchbergerRun {
 public:
  BuchbergerRun(const RingPtr& ring, std::vector<int> twists, std::span<const ModuleVector> gens,
                const GbOptions& options)
      : ring_(ring), field_(ring->field()), twists_(std::move(twists)), gens_(gens), options_(options),
        reducer_(twists_.size()) {}

  GroebnerBasis run();

 private:
  void add_element(ModuleVector vec, ModuleVector lift);
  void update_pairs(std::size_t t);
  void process_pairs(std::vector<Pair> batch);
  void interreduce();

  bool tracking() const { return options_.lift != LiftMode::None; }

  const RingPtr& ring_;
  const Field& field_;
  std::vector<int> twists_;
  std::span<const ModuleVector> gens_;
  GbOptions options_;

  // Stable storage: elements are referenced by pointer from the reducer.
  std::deque<ModuleVector> elements_;
  std::vector<ModuleVector> lifts_;
  std::vector<int> degrees_;
  Reducer reducer_;
  std::vector<Pair> pairs_;
  std::vector<std::size_t> minimal_;
  std::vector<int> lift_twists_;
};

void BuchbergerRun::add_element(ModuleVector vec, ModuleVector lift) {
  Scalar lc = vec.leading().coeff;
  if (!field_.is_one(lc)) {
    Scalar inv = field_.inv(lc);
    vec = vec.scaled(field_, Monomial{}, inv);
    if (tracking()) lift = lift.scaled(field_, Monomial{}, inv);
  }
  degrees_.push_back(*vec.degree(twists_));
  elements_.push_back(std::move(vec));
  lifts_.push_back(std::move(lift));
  reducer_.add(&elements_.back());
  update_pairs(elements_.size() - 1);
}

void BuchbergerRun::update_pairs(std::size_t t) {
  const ModTerm& lt = elements_[t].leading();
  const bool ideal = twists_.size() == 1;

  struct Cand {
    std::size_t i;
    Monomial lcm;
    bool coprime;
    bool alive = true;
  };
  std::vector<Cand> cands;
  for (std::size_t i = 0; i < t; ++i) {
    const ModTerm& li = elements_[i].leading();
    if (li.comp != lt.comp) continue;
    cands.push_back({i, li.mono.lcm(lt.mono), li.mono.coprime(lt.mono)});
  }

  // Chain criterion on existing pairs.
  std::erase_if(pairs_, [&](const Pair& p) {
    if (p.comp != lt.comp || !lt.mono.divides(p.lcm)) return false;
    Monomial a = elements_[p.i].leading().mono.lcm(lt.mono);
    Monomial b = elements_[p.k].leading().mono.lcm(lt.mono);
    return !(a == p.lcm) && !(b == p.lcm);
  });

  // Gebauer-Moeller M: drop candidates whose lcm is a proper multiple.
  for (auto& c : cands) {
    for (const auto& d : cands) {
      if (&c != &d && d.lcm.divides(c.lcm) && !(d.lcm == c.lcm)) {
        c.alive = false;
        break;
      }
    }
  }
  // F: one candidate per lcm; product criterion kills the whole class (ideals only).
  std::vector<Cand> kept;
  for (std::size_t a = 0; a < cands.size(); ++a) {
    if (!cands[a].alive) continue;
    bool first = true;
    bool any_coprime = cands[a].coprime;
    for (std::size_t b = 0; b < cands.size(); ++b) {
      if (b == a || !(cands[b].lcm == cands[a].lcm)) continue;
      if (b < a && cands[b].alive) first = false;
      any_coprime = any_coprime || cands[b].coprime;
    }
    if (!first) continue;
    if (ideal && any_coprime) continue;
    kept.push_back(cands[a]);
  }
  for (const auto& c : kept) {
    pairs_.push_back({c.lcm.degree() + twists_[lt.comp], c.lcm, lt.comp, c.i, t});
  }
}

void BuchbergerRun::process_pairs(std::vector<Pair> batch) {
  std::sort(batch.begin(), batch.end(), pair_before);
  const std::size_t snapshot = reducer_.size();

  // Pre-reduction against the basis as it stood before this degree; pure
  // per pair, so the split across workers cannot change the result.
  std::vector<Reduction> pre(batch.size());
  auto work = [&](std::size_t from, std::size_t to) {
    for (std::size_t p = from; p < to; ++p) {
      const Pair& pr = batch[p];
      pre[p] = reduce(field_, spair_streams(field_, elements_[pr.i], elements_[pr.k], pr.lcm), reducer_, snapshot);
    }
  };
  unsigned workers = std::max(1u, options_.workers);
  if (workers == 1 || batch.size() < 2 * workers) {
    work(0, batch.size());
  } else {
    std::vector<std::future<void>> jobs;
    std::size_t chunk = (batch.size() + workers - 1) / workers;
    for (std::size_t from = 0; from < batch.size(); from += chunk) {
      jobs.push_back(std::async(std::launch::async, work, from, std::min(batch.size(), from + chunk)));
    }
    for (auto& j : jobs) j.get();
  }

  for (std::size_t p = 0; p < batch.size(); ++p) {
    if (pre[p].remainder.is_zero()) continue;
    Reduction fin = reduce(field_, {{field_.one(), Monomial{}, &pre[p].remainder, 0}}, reducer_, reducer_.size());
    if (fin.remainder.is_zero()) continue;
    ModuleVector lift;
    if (tracking()) {
      const Pair& pr = batch[p];
      Monomial ui = pr.lcm.quotient(elements_[pr.i].leading().mono);
      Monomial uk = pr.lcm.quotient(elements_[pr.k].leading().mono);
      auto quotient = std::move(pre[p].quotient);
      quotient.insert(quotient.end(), fin.quotient.begin(), fin.quotient.end());
      lift = combine_lifts(field_, {{field_.one(), {ui, &lifts_[pr.i]}}, {field_.neg(field_.one()), {uk, &lifts_[pr.k]}}},
                           quotient, lifts_);
    }
    add_element(std::move(fin.remainder), std::move(lift));
  }
}

void BuchbergerRun::interreduce() {
  // Leading terms are already pairwise non-dividing; reduce tails only.
  std::vector<ModuleVector> reduced(elements_.size());
  std::vector<ModuleVector> lifts(elements_.size());
  for (std::size_t e = 0; e < elements_.size(); ++e) {
    const ModuleVector& g = elements_[e];
    Reduction r = reduce(field_, {{field_.one(), Monomial{}, &g, 1}}, reducer_, reducer_.size());
    std::vector<ModTerm> terms;
    terms.reserve(r.remainder.size() + 1);
    terms.push_back(g.leading());
    terms.insert(terms.end(), r.remainder.terms().begin(), r.remainder.terms().end());
    reduced[e] = ModuleVector(field_, std::move(terms));
    if (tracking()) lifts[e] = combine_lifts(field_, {{field_.one(), {Monomial{}, &lifts_[e]}}}, r.quotient, lifts_);
  }
  elements_.assign(std::make_move_iterator(reduced.begin()), std::make_move_iterator(reduced.end()));
  lifts_ = std::move(lifts);
}

GroebnerBasis BuchbergerRun::run() {
  const std::size_t rank = twists_.size();
  std::vector<int> gen_degree(gens_.size(), 0);
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    const ModuleVector& g = gens_[j];
    for (const auto& t : g.terms()) {
      if (t.comp >= rank) throw MismatchError("generator has a component beyond the free module rank");
    }
    if (g.is_zero()) continue;
    if (!g.is_homogeneous(twists_)) throw DomainError("non-homogeneous generator rejected");
    gen_degree[j] = *g.degree(twists_);
    order.push_back(j);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return gen_degree[a] < gen_degree[b]; });

  if (options_.lift == LiftMode::Inputs) {
    lift_twists_ = gen_degree;
  }

  std::size_t next_input = 0;
  for (;;) {
    std::optional<int> d;
    if (next_input < order.size()) d = gen_degree[order[next_input]];
    for (const auto& p : pairs_) {
      if (!d || p.degree < *d) d = p.degree;
    }
    if (!d) break;
    if (options_.degree_limit && *d > *options_.degree_limit) break;

    std::vector<Pair> batch;
    std::erase_if(pairs_, [&](const Pair& p) {
      if (p.degree != *d) return false;
      batch.push_back(p);
      return true;
    });
    process_pairs(std::move(batch));

    for (; next_input < order.size() && gen_degree[order[next_input]] == *d; ++next_input) {
      std::size_t j = order[next_input];
      Reduction r = reduce(field_, {{field_.one(), Monomial{}, &gens_[j], 0}}, reducer_, reducer_.size());
      if (r.remainder.is_zero()) continue;
      ModuleVector lift;
      if (options_.lift == LiftMode::Inputs) {
        ModuleVector unit = ModuleVector::unit(field_, static_cast<std::uint32_t>(j));
        lift = combine_lifts(field_, {{field_.one(), {Monomial{}, &unit}}}, r.quotient, lifts_);
      } else if (options_.lift == LiftMode::Minimal) {
        ModuleVector unit = ModuleVector::unit(field_, static_cast<std::uint32_t>(lift_twists_.size()));
        lift = combine_lifts(field_, {{field_.one(), {Monomial{}, &unit}}}, r.quotient, lifts_);
        lift_twists_.push_back(*d);
      }
      if (options_.select_minimal) minimal_.push_back(j);
      add_element(std::move(r.remainder), std::move(lift));
    }
  }

  interreduce();

  std::vector<std::size_t> perm(elements_.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (degrees_[a] != degrees_[b]) return degrees_[a] < degrees_[b];
    const auto& la = elements_[a].leading();
    const auto& lb = elements_[b].leading();
    return module_cmp(la.mono, la.comp, lb.mono, lb.comp) < 0;
  });

  GroebnerBasis out;
  out.ring = ring_;
  out.twists = twists_;
  for (std::size_t e : perm) {
    out.elements.push_back(std::move(elements_[e]));
    if (tracking()) out.lifts.push_back(std::move(lifts_[e]));
  }
  out.lift_twists = std::move(lift_twists_);
  out.minimal = std::move(minimal_);
  return out;
}

struct SchreyerPair {
  std::size_t i;
  std::size_t k;
  Monomial lcm;
};

/// Pairs (i,k), i<k, same leading component, whose quotient lcm/lt_k is a
/// minimal generator of the colon ideal (lt_i : i<k) : lt_k.
std::vector<SchreyerPair> schreyer_pairs(const std::vector<ModuleVector>& G) {
  std::vector<SchreyerPair> out;
  for (std::size_t k = 0; k < G.size(); ++k) {
    const ModTerm& lk = G[k].leading();
    std::vector<std::pair<std::size_t, Monomial>> quot;
    for (std::size_t i = 0; i < k; ++i) {
      const ModTerm& li = G[i].leading();
      if (li.comp != lk.comp) continue;
      quot.emplace_back(i, li.mono.lcm(lk.mono).quotient(lk.mono));
    }
    for (std::size_t a = 0; a < quot.size(); ++a) {
      bool minimal = true;
      for (std::size_t b = 0; b < quot.size() && minimal; ++b) {
        if (a == b || !quot[b].second.divides(quot[a].second)) continue;
        // Equal quotients: keep the earliest index.
        if (!(quot[b].second == quot[a].second) || b < a) minimal = false;
      }
      if (minimal) out.push_back({quot[a].first, k, quot[a].second * lk.mono});
    }
  }
  return out;
}

Reducer reducer_for(const GroebnerBasis& G) {
  Reducer r(G.twists.size());
  for (const auto& g : G.elements) r.add(&g);
  return r;
}

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, std::vector<int> twists, std::span<const ModuleVector> gens,
                         const GbOptions& options) {
  return BuchbergerRun(ring, std::move(twists), gens, options).run();
}

ModuleVector normal_form(const ModuleVector& v, const GroebnerBasis& G) {
  const Field& field = G.ring->field();
  Reducer r = reducer_for(G);
  return reduce(field, {{field.one(), Monomial{}, &v, 0}}, r, r.size()).remainder;
}

std::vector<ModuleVector> syzygies(const GroebnerBasis& G) {
  const Field& field = G.ring->field();
  Reducer r = reducer_for(G);
  std::vector<ModuleVector> out;
  for (const auto& sp : schreyer_pairs(G.elements)) {
    Reduction red = reduce(field, spair_streams(field, G.elements[sp.i], G.elements[sp.k], sp.lcm), r, r.size());
    std::vector<ModTerm> terms;
    terms.push_back({sp.lcm.quotient(G.elements[sp.i].leading().mono), static_cast<std::uint32_t>(sp.i), field.one()});
    terms.push_back({sp.lcm.quotient(G.elements[sp.k].leading().mono), static_cast<std::uint32_t>(sp.k),
                     field.neg(field.one())});
    for (const auto& q : red.quotient) terms.push_back({q.mult, static_cast<std::uint32_t>(q.index), field.neg(q.coeff)});
    ModuleVector s(field, std::move(terms));
    if (!s.is_zero()) out.push_back(std::move(s));
  }
  return out;
}

std::vector<ModuleVector> kernel_from_basis(const GroebnerBasis& G, std::span<const ModuleVector> columns) {
  const Field& field = G.ring->field();
  if (!G.has_lifts()) throw DomainError("kernel_from_basis needs a basis computed with lifts");
  Reducer r = reducer_for(G);
  std::vector<ModuleVector> out;
  for (const auto& sp : schreyer_pairs(G.elements)) {
    Reduction red = reduce(field, spair_streams(field, G.elements[sp.i], G.elements[sp.k], sp.lcm), r, r.size());
    Monomial ui = sp.lcm.quotient(G.elements[sp.i].leading().mono);
    Monomial uk = sp.lcm.quotient(G.elements[sp.k].leading().mono);
    ModuleVector s = combine_lifts(field, {{field.one(), {ui, &G.lifts[sp.i]}}, {field.neg(field.one()), {uk, &G.lifts[sp.k]}}},
                                   red.quotient, G.lifts);
    if (!s.is_zero()) out.push_back(std::move(s));
  }
  for (std::size_t j = 0; j < columns.size(); ++j) {
    Reduction red = reduce(field, {{field.one(), Monomial{}, &columns[j], 0}}, r, r.size());
    if (!red.remainder.is_zero()) throw DomainError("column outside the span of its basis");
    ModuleVector unit = ModuleVector::unit(field, static_cast<std::uint32_t>(j));
    ModuleVector s = combine_lifts(field, {{field.one(), {Monomial{}, &unit}}}, red.quotient, G.lifts);
    if (!s.is_zero()) out.push_back(std::move(s));
  }
  return out;
}

std::vector<ModuleVector> kernel_generators(const RingPtr& ring, const std::vector<int>& twists,
                                            std::span<const ModuleVector> columns,
                                            const std::vector<int>& src_twists, unsigned workers) {
  GbOptions opt;
  opt.lift = LiftMode::Inputs;
  opt.workers = workers;
  GroebnerBasis G = buchberger(ring, twists, columns, opt);
  G.lift_twists = src_twists;
  return kernel_from_basis(G, columns);
}

}  // namespace gradex
