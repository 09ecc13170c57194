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
// gradex command-line front end. Talks to the engine only through gradex.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gradex/gradex.h"

namespace {

enum Exit { kOk = 0, kCompute = 1, kUsage = 2, kVerifyFailed = 3 };

struct Options {
  std::string file;
  std::string M;
  std::string N;
  std::optional<int> j;
  std::string method = "duality";
  int tmax = 8;
  int plateau = 2;
  std::vector<std::string> probes;
  std::optional<std::uint64_t> seed;
  bool json = false;
  std::string suite = "paper";
  int workers = 1;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("-f,--file", o.file, "input document (JSON)")->check(CLI::ExistingFile);
  sub->add_flag("--json", o.json, "machine-readable output");
  sub->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
}

int report_error(gradex_status s) {
  std::fprintf(stderr, "gradex: %s\n", gradex_last_error());
  return s == GRADEX_ERR_USAGE ? kUsage : kCompute;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gradex: graded free resolutions, Ext/Tor and generalized local cohomology"};
  app.require_subcommand(1);
  app.set_version_flag("--version", gradex_version());
  Options o;

  struct Spec {
    const char* name;
    const char* help;
    bool needs_n;
  };
  const Spec specs[] = {
      {"gb", "reduced Groebner basis of the relations of M", false},
      {"resolve", "minimal graded free resolution of M", false},
      {"betti", "Betti table of M", false},
      {"reg", "Castelnuovo-Mumford regularity of M", false},
      {"hilbert", "Hilbert series of M", false},
      {"dim", "Krull dimension of M", false},
      {"ext", "Ext^j(M,N)", true},
      {"tor", "Tor_j(M,N)", true},
      {"gencoh", "generalized local cohomology H^i_m(M,N)", true},
  };
  std::vector<CLI::App*> subs;
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, o);
    sub->get_option("--file")->required();
    sub->add_option("-M", o.M, "module name")->required();
    if (s.needs_n) sub->add_option("-N", o.N, "second module name")->required();
    std::string name = s.name;
    if (name == "ext" || name == "tor") sub->add_option("--j", o.j, "homological index (all when omitted)");
    if (name == "gencoh") {
      sub->add_option("--method", o.method, "duality, colimit or formula")
          ->check(CLI::IsMember({"duality", "colimit", "formula"}));
      sub->add_option("--tmax", o.tmax, "largest t for the colimit")->check(CLI::PositiveNumber);
      sub->add_option("--plateau", o.plateau, "equal consecutive values that count as stable")
          ->check(CLI::PositiveNumber);
      sub->add_option("--probe", o.probes, "i,mu (repeatable)")->allow_extra_args(false);
    }
    subs.push_back(sub);
  }
  CLI::App* verify = app.add_subcommand("verify", "run the theorem verification suite");
  add_common(verify, o);
  verify->add_option("--suite", o.suite, "paper or random")->check(CLI::IsMember({"paper", "random"}));
  verify->add_option("--seed", o.seed, "seed of the random corpus");
  subs.push_back(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  std::string command;
  for (auto* s : subs) {
    if (s->parsed()) command = s->get_name();
  }

  nlohmann::json req = {{"command", command}, {"json", o.json}, {"workers", o.workers}};
  if (!o.M.empty()) req["M"] = o.M;
  if (!o.N.empty()) req["N"] = o.N;
  if (o.j) req["j"] = *o.j;
  if (command == "gencoh") {
    req["method"] = o.method;
    req["tmax"] = o.tmax;
    req["plateau"] = o.plateau;
    nlohmann::json probes = nlohmann::json::array();
    for (const auto& p : o.probes) {
      int i = 0, mu = 0;
      char tail = 0;
      if (std::sscanf(p.c_str(), "%d,%d%c", &i, &mu, &tail) != 2) {
        std::fprintf(stderr, "gradex: --probe expects i,mu but got '%s'\n", p.c_str());
        return kUsage;
      }
      probes.push_back({i, mu});
    }
    req["probes"] = probes;
  }
  if (command == "verify") {
    req["suite"] = o.suite;
    if (o.seed) req["seed"] = *o.seed;
  }

  gradex_document* doc = nullptr;
  if (!o.file.empty()) {
    std::ifstream in(o.file, std::ios::binary);
    if (!in) {
      std::fprintf(stderr, "gradex: cannot read %s\n", o.file.c_str());
      return kUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    gradex_status s = gradex_document_parse(text.data(), text.size(), &doc);
    if (s != GRADEX_OK) {
      std::fprintf(stderr, "gradex: %s: %s\n", o.file.c_str(), gradex_last_error());
      return s == GRADEX_ERR_USAGE ? kUsage : kCompute;
    }
  }

  char* out = nullptr;
  gradex_status s = gradex_run(doc, req.dump().c_str(), &out);
  gradex_document_free(doc);
  if (out) {
    std::fputs(out, stdout);
    gradex_string_free(out);
  }
  if (s == GRADEX_OK) return kOk;
  if (s == GRADEX_VERIFY_FAILED) return kVerifyFailed;
  return report_error(s);
}
