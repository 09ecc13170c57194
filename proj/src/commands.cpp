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
#include "gradex/commands.hpp"

#include <map>
#include <sstream>

#include "gradex/error.hpp"
#include "gradex/gb.hpp"
#include "gradex/homcoh.hpp"
#include "gradex/verify.hpp"

namespace gradex {

using nlohmann::json;

namespace {

struct Request {
  const InputDocument* doc;
  const json& req;
  bool as_json;
  unsigned workers;

  template <typename T>
  std::optional<T> get(const char* key) const {
    if (!req.contains(key) || req[key].is_null()) return std::nullopt;
    try {
      return req[key].get<T>();
    } catch (const json::exception&) {
      throw UsageError(std::string("bad value for '") + key + "'");
    }
  }

  /// "(M,N)" with the names the caller used.
  std::string pair_label() const {
    return "(" + get<std::string>("M").value_or("M") + "," + get<std::string>("N").value_or("N") + ")";
  }

  const Presentation& module(const char* key) const {
    auto name = get<std::string>(key);
    if (!name) throw UsageError(std::string("this command needs -") + key + " NAME");
    if (!doc) throw UsageError("this command needs an input document (-f FILE)");
    auto it = doc->modules.find(*name);
    if (it == doc->modules.end()) throw UsageError("no module named '" + *name + "' in the document");
    return it->second.presentation;
  }
};

std::string free_text(std::vector<int> twists) {
  if (twists.empty()) return "0";
  std::map<int, int> counts;
  for (int e : twists) ++counts[e];
  std::string out;
  for (const auto& [e, c] : counts) {
    if (!out.empty()) out += " + ";
    out += e == 0 ? "R" : e > 0 ? "R(-" + std::to_string(e) + ")" : "R(" + std::to_string(-e) + ")";
    if (c > 1) out += "^" + std::to_string(c);
  }
  return out;
}

std::string matrix_text(const GradedMap& map, const std::string& indent) {
  std::string out;
  for (const auto& row : map.matrix()) {
    out += indent + "[";
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? ", " : "") + row[j].to_string();
    out += "]\n";
  }
  return out;
}

std::string presentation_text(const std::string& title, const Presentation& P) {
  if (is_zero_module(P)) return title + " = 0\n";
  auto inv = invariants(P);
  std::string out = title + ": generators " + free_text(P.generators().twists) + ", relations " +
                    free_text(P.map.source().twists) + "\n";
  out += "  hilbert numerator " + inv.hilbert_numerator.to_string() + ", dim " + inv.krull_dim.to_string() +
         ", indeg " + inv.indeg.to_string() + ", end " + inv.end.to_string() + "\n";
  if (!P.relations().empty()) out += matrix_text(P.map, "  ");
  return out;
}

json presentation_json(const Presentation& P) {
  auto inv = invariants(P);
  json out = to_json(P);
  out["hilbert_numerator"] = to_json(inv.hilbert_numerator);
  out["dim"] = to_json(inv.krull_dim);
  out["indeg"] = to_json(inv.indeg);
  out["end"] = to_json(inv.end);
  return out;
}

CommandResult finish(const Request& r, const json& j, const std::string& text) {
  return {r.as_json ? j.dump(2) + "\n" : text, false};
}

CommandResult cmd_gb(const Request& r) {
  const Presentation& M = r.module("M");
  const auto& tw = M.generators().twists;
  GbOptions opt;
  opt.workers = r.workers;
  auto G = buchberger(M.ring(), tw, M.relations(), opt);
  json elems = json::array();
  std::string text;
  auto degrees = G.degrees();
  for (std::size_t k = 0; k < G.elements.size(); ++k) {
    auto comps = G.elements[k].to_polynomials(M.ring(), tw.size());
    json row = json::array();
    std::string line;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      row.push_back(comps[i].to_string());
      line += (i ? ", " : "") + comps[i].to_string();
    }
    elems.push_back(row);
    text += (tw.size() == 1 ? line : "[" + line + "]") + "  (degree " + std::to_string(degrees[k]) + ")\n";
  }
  if (G.elements.empty()) text = "0\n";
  return finish(r, {{"twists", tw}, {"elements", elems}, {"degrees", degrees}}, text);
}

CommandResult cmd_resolve(const Request& r) {
  auto res = minimal_free_resolution(r.module("M"), r.workers);
  json mods = json::array(), maps = json::array();
  std::string text;
  for (std::size_t i = 0; i < res.modules.size(); ++i) {
    mods.push_back(res.modules[i].twists);
    text += "F" + std::to_string(i) + " = " + free_text(res.modules[i].twists) + "\n";
  }
  for (std::size_t i = 0; i < res.maps.size(); ++i) {
    json rows = json::array();
    for (const auto& row : res.maps[i].matrix()) {
      json jr = json::array();
      for (const auto& f : row) jr.push_back(f.to_string());
      rows.push_back(jr);
    }
    maps.push_back(rows);
    text += "d" + std::to_string(i + 1) + " : F" + std::to_string(i + 1) + " -> F" + std::to_string(i) + "\n";
    text += matrix_text(res.maps[i], "  ");
  }
  if (res.is_zero_module()) text = "0\n";
  return finish(r, {{"modules", mods}, {"maps", maps}}, text);
}

CommandResult cmd_betti(const Request& r) {
  const Presentation& M = r.module("M");
  auto table = betti(M);
  json j = {{"betti", to_json(table)}, {"reg", to_json(table.regularity())}};
  j["pdim"] = table.empty() ? json(nullptr) : json(table.max_index());
  return finish(r, j, render_betti(table));
}

CommandResult cmd_reg(const Request& r) {
  auto v = reg(r.module("M"));
  return finish(r, {{"reg", to_json(v)}}, "reg = " + v.to_string() + "\n");
}

CommandResult cmd_hilbert(const Request& r) {
  const Presentation& M = r.module("M");
  auto h = hilbert_series(M);
  std::size_t n = M.ring()->nvars();
  std::string text = "H(t) = (" + h.to_string() + ") / (1-t)^" + std::to_string(n) + "\n";
  return finish(r, {{"numerator", to_json(h)}, {"nvars", n}}, text);
}

CommandResult cmd_dim(const Request& r) {
  auto inv = invariants(r.module("M"));
  json j = {{"dim", to_json(inv.krull_dim)}, {"indeg", to_json(inv.indeg)}, {"end", to_json(inv.end)}};
  j["cohen_macaulay"] = inv.is_cm ? json(*inv.is_cm) : json(nullptr);
  return finish(r, j, "dim = " + inv.krull_dim.to_string() + "\n");
}

CommandResult cmd_ext_tor(const Request& r, bool ext) {
  const Presentation& M = r.module("M");
  const Presentation& N = r.module("N");
  std::vector<std::pair<int, Presentation>> out;
  if (auto j = r.get<int>("j")) {
    if (*j < 0) throw UsageError("--j must be nonnegative");
    out.emplace_back(*j, ext ? ext_module(M, N, *j, r.workers).presentation : tor_module(M, N, *j, r.workers));
  } else if (ext) {
    auto all = ext_modules(M, N, r.workers);
    for (std::size_t j = 0; j < all.size(); ++j) out.emplace_back(static_cast<int>(j), all[j]);
  } else if (!is_zero_module(M)) {
    for (int i = 0; i <= pdim(M); ++i) out.emplace_back(i, tor_module(M, N, i, r.workers));
  }
  const char* name = ext ? "Ext" : "Tor";
  json arr = json::array();
  std::string text;
  for (const auto& [j, P] : out) {
    json e = presentation_json(P);
    e["index"] = j;
    arr.push_back(e);
    text += presentation_text(std::string(name) + (ext ? "^" : "_") + std::to_string(j) + r.pair_label(), P);
  }
  if (out.empty()) text = "0\n";
  return finish(r, {{ext ? "ext" : "tor", arr}}, text);
}

CommandResult cmd_gencoh(const Request& r) {
  const Presentation& M = r.module("M");
  const Presentation& N = r.module("N");
  std::string method = r.get<std::string>("method").value_or("duality");
  if (method == "duality") {
    auto prof = gencoh_duality(M, N, r.workers);
    json a = json::array();
    std::string text;
    for (std::size_t i = 0; i < prof.a.size(); ++i) {
      a.push_back(to_json(prof.a[i]));
      text += "a_" + std::to_string(i) + " = " + prof.a[i].to_string() + "\n";
    }
    text += "reg_gen = " + prof.reg_gen.to_string() + "\n";
    return finish(r, {{"method", method}, {"a", a}, {"reg_gen", to_json(prof.reg_gen)}}, text);
  }
  if (method == "formula") {
    auto v = reg_gen_formula(M, N);
    return finish(r, {{"method", method}, {"reg_gen", to_json(v)}}, "reg_gen = " + v.to_string() + "\n");
  }
  if (method != "colimit") throw UsageError("--method must be duality, colimit or formula");
  auto probes = r.get<std::vector<std::pair<int, int>>>("probes").value_or(std::vector<std::pair<int, int>>{});
  if (probes.empty()) throw UsageError("--method colimit needs at least one --probe i,mu");
  int tmax = r.get<int>("tmax").value_or(8);
  int plateau = r.get<int>("plateau").value_or(2);
  if (tmax < 1 || plateau < 1) throw UsageError("--tmax and --plateau must be positive");
  ColimitOracle oracle(M, N, r.workers);
  json arr = json::array();
  std::string text;
  for (const auto& [i, mu] : probes) {
    if (i < 0) throw UsageError("probe index must be nonnegative");
    auto res = oracle.piece(i, mu, tmax, plateau);
    json p = {{"i", i}, {"mu", mu}, {"sequence", res.sequence}};
    std::string seq;
    for (auto v : res.sequence) seq += " " + std::to_string(v);
    text += "H^" + std::to_string(i) + r.pair_label() + "_" + std::to_string(mu) + ":" + seq;
    if (res.value) {
      p["value"] = *res.value;
      p["stabilized_at"] = res.stabilized_at;
      text += " -> " + std::to_string(*res.value) + " (stable from t = " + std::to_string(res.stabilized_at) + ")\n";
    } else {
      p["value"] = "not stabilized";
      text += " -> not stabilized by t = " + std::to_string(tmax) + "\n";
    }
    arr.push_back(p);
  }
  return finish(r, {{"method", method}, {"tmax", tmax}, {"plateau", plateau}, {"probes", arr}}, text);
}

CommandResult cmd_verify(const Request& r) {
  CorpusSpec spec;
  std::string suite = r.get<std::string>("suite").value_or("paper");
  if (suite == "paper") spec.suite = CorpusSpec::Suite::Paper;
  else if (suite == "random") spec.suite = CorpusSpec::Suite::Random;
  else throw UsageError("--suite must be paper or random");
  if (auto seed = r.get<std::uint64_t>("seed")) spec.seed = *seed;
  spec.workers = r.workers;
  auto report = run_suite(spec);
  json j = report.to_json(true);
  std::string text;
  for (const auto& c : report.checks) {
    text += verdict_name(c.verdict) + "  " + c.id + "  " + c.fixture;
    if (c.verdict == Verdict::Fail && !c.note.empty()) text += "  (" + c.note + ")";
    text += "\n";
  }
  const json& s = j["summary"];
  text += "summary: " + std::to_string(s["pass"].get<int>()) + " pass, " + std::to_string(s["fail"].get<int>()) +
          " fail, " + std::to_string(s["hypotheses-not-met"].get<int>()) + " hypotheses-not-met, " +
          std::to_string(s["skipped"].get<int>()) + " skipped\n";
  CommandResult out = finish(r, j, text);
  out.verify_failed = report.any_failure();
  return out;
}

}  // namespace

CommandResult run_command(const InputDocument* doc, const json& request) {
  if (!request.is_object()) throw UsageError("request must be a JSON object");
  Request r{doc, request, false, 1};
  r.as_json = r.get<bool>("json").value_or(false);
  int workers = r.get<int>("workers").value_or(1);
  if (workers < 1) throw UsageError("workers must be positive");
  r.workers = static_cast<unsigned>(workers);
  auto cmd = r.get<std::string>("command");
  if (!cmd) throw UsageError("missing command");
  if (*cmd == "gb") return cmd_gb(r);
  if (*cmd == "resolve") return cmd_resolve(r);
  if (*cmd == "betti") return cmd_betti(r);
  if (*cmd == "reg") return cmd_reg(r);
  if (*cmd == "hilbert") return cmd_hilbert(r);
  if (*cmd == "dim") return cmd_dim(r);
  if (*cmd == "ext") return cmd_ext_tor(r, true);
  if (*cmd == "tor") return cmd_ext_tor(r, false);
  if (*cmd == "gencoh") return cmd_gencoh(r);
  if (*cmd == "verify") return cmd_verify(r);
  throw UsageError("unknown command '" + *cmd + "'");
}

}  // namespace gradex
