// Copyright 2026 The sl3web Authors.
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

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sl3web/sl3web.h"

using json = nlohmann::json;

namespace {

struct Failure : std::runtime_error {
  int code;
  Failure(int c, const std::string& m) : std::runtime_error(m), code(c) {}
};

void check(sl3web_status s) {
  if (s != SL3WEB_OK) throw Failure(s == SL3WEB_ERR_INVARIANT ? 2 : 1, sl3web_last_error());
}

struct WebDeleter {
  void operator()(sl3web_web* w) const { sl3web_web_free(w); }
};
struct ComboDeleter {
  void operator()(sl3web_combo* c) const { sl3web_combo_free(c); }
};
using WebPtr = std::unique_ptr<sl3web_web, WebDeleter>;
using ComboPtr = std::unique_ptr<sl3web_combo, ComboDeleter>;

std::string take(char* s) {
  std::string r = s ? s : "";
  sl3web_string_free(s);
  return r;
}

WebPtr load(const std::string& path) {
  sl3web_web* w = nullptr;
  check(sl3web_web_read_file(path.c_str(), &w));
  return WebPtr(w);
}

WebPtr corpus(const std::string& name) {
  sl3web_web* w = nullptr;
  check(sl3web_web_corpus(name.c_str(), &w));
  return WebPtr(w);
}

double msSince(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct TraceState {
  long step = 0;
};

void traceEvent(const char* event, void* user) {
  auto* t = static_cast<TraceState*>(user);
  std::cout << json{{"event", "rule"}, {"step", ++t->step}, {"rule", event}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sl3 web invariants: reduction, expansion, bases, red graphs"};
  app.require_subcommand(1);
  uint64_t seed = 1;
  int jobs = 1;
  app.add_option("--seed", seed, "seed for randomized checks and strategies")->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads")->capture_default_str();

  std::string file, signature, state, strategy = "flows", format = "svg", faces, pairing;
  int k = 3, count = 5;
  bool quantum = false, trace = false, exhaustive = false, all = false, full = false;
  std::vector<std::string> probes;

  auto* reduce = app.add_subcommand("reduce", "skein-reduce a diagram to non-elliptic webs");
  reduce->add_option("file", file)->required();
  reduce->add_flag("--quantum", quantum, "keep v generic instead of v = -1");
  reduce->add_flag("--trace", trace, "emit one JSON event per rewriting step");
  bool shuffle = false;
  reduce->add_flag("--shuffle", shuffle, "pick rewriting rules at random from --seed");

  auto* evalc = app.add_subcommand("eval-classical", "evaluate a diagram and its normal form numerically");
  evalc->add_option("file", file)->required();
  evalc->add_option("--count", count, "number of random configurations")->capture_default_str();

  auto* expand = app.add_subcommand("expand", "expand in the tensor product basis");
  expand->add_option("file", file)->required();
  expand->add_option("--strategy", strategy, "flows, contraction or discconfig")->capture_default_str();

  auto* coeff = app.add_subcommand("coeff", "coefficient at one boundary state");
  coeff->add_option("file", file)->required();
  coeff->add_option("--state", state, "comma separated word over 1, 0, -1")->required();
  coeff->add_flag("--flows", all, "also list the weight-1 flows");

  auto* dim = app.add_subcommand("dim", "dimension of the invariant space");
  dim->add_option("signature", signature)->required();

  auto* enumerate = app.add_subcommand("enumerate", "all non-elliptic basis webs of a signature");
  enumerate->add_option("signature", signature)->required();

  auto* grow = app.add_subcommand("grow", "basis web with a given dominant path");
  grow->add_option("signature", signature)->required();
  grow->add_option("--state", state, "dominant path")->required();

  auto* cheb = app.add_subcommand("cheb", "Chebyshev identities of bracelets and bands");
  cheb->require_subcommand(1);
  auto* vbr = cheb->add_subcommand("verify-bracelet", "bracelets against first-kind polynomials");
  vbr->add_option("file", file)->required();
  vbr->add_option("--k", k, "largest k")->capture_default_str();
  auto* vba = cheb->add_subcommand("verify-band", "bands against second-kind polynomials");
  vba->add_option("file", file)->required();
  vba->add_option("--k", k, "largest k")->capture_default_str();
  std::string kind = "T";
  auto* mono = cheb->add_subcommand("monomial", "x^k as a positive combination");
  mono->add_option("--k", k)->capture_default_str();
  mono->add_option("--kind", kind, "T or U")->capture_default_str();

  auto* red = app.add_subcommand("redgraph", "red graphs of a non-elliptic web");
  red->require_subcommand(1);
  auto* rlist = red->add_subcommand("list", "exact red graphs");
  rlist->add_option("file", file)->required();
  rlist->add_flag("--exhaustive", exhaustive, "search all face subsets");
  rlist->add_flag("--all", all, "with --exhaustive, list non-exact graphs too");
  auto* rred = red->add_subcommand("reduce", "G-reduction of an exact red graph");
  rred->add_option("file", file)->required();
  rred->add_option("--faces", faces, "JSON array of face ids")->required();
  rred->add_option("--pairing", pairing, "JSON array of half-edge pairs");

  auto* canon = app.add_subcommand("canon", "dual canonicality diagnostics");
  canon->require_subcommand(1);
  auto* ccheck = canon->add_subcommand("check", "negative exponent property and red graphs");
  ccheck->add_option("file", file)->required();
  ccheck->add_option("--state", probes, "check only these states");
  auto* cprop = canon->add_subcommand("obstruction", "report on the Thick5 integer-coefficient obstruction");
  cprop->add_flag("--full", full, "also classify every cycle G-reduction of Thick5");

  auto* render = app.add_subcommand("render", "draw a web");
  render->add_option("file", file)->required();
  render->add_option("--format", format, "svg or dot")->capture_default_str();

  auto* bench = app.add_subcommand("bench", "time evaluators on thickened hexagons, CSV");
  bench->add_option("--k", k, "largest thickness")->capture_default_str();

  std::string dir;
  auto* corp = app.add_subcommand("corpus", "write the golden corpus");
  corp->add_option("dir", dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 1;
  }

  try {
    if (*reduce) {
      WebPtr w = load(file);
      TraceState t;
      sl3web_combo* c = nullptr;
      check(sl3web_reduce(w.get(), quantum, shuffle ? seed : 0, trace ? traceEvent : nullptr, &t, &c));
      ComboPtr cp(c);
      char* out = nullptr;
      check(sl3web_combo_to_json(c, &out));
      json r = json::parse(take(out));
      if (trace) {
        std::cout << json{{"event", "done"}, {"steps", t.step}, {"result", r}}.dump() << "\n";
      } else {
        std::cout << r.dump(2) << "\n";
      }
    } else if (*evalc) {
      WebPtr w = load(file);
      char* out = nullptr;
      check(sl3web_eval_classical(w.get(), seed, count, &out));
      std::cout << json::parse(take(out)).dump(2) << "\n";
    } else if (*expand) {
      WebPtr w = load(file);
      char* out = nullptr;
      check(sl3web_expand(w.get(), strategy.c_str(), &out));
      std::cout << json::parse(take(out)).dump(2) << "\n";
    } else if (*coeff) {
      WebPtr w = load(file);
      char* out = nullptr;
      check(sl3web_coefficient(w.get(), state.c_str(), &out));
      std::string poly = take(out);
      if (all) {
        check(sl3web_flows_at(w.get(), state.c_str(), 0, 6, &out));
        json f = json::parse(take(out));
        std::cout << json{{"coefficient", poly}, {"weight_one", f}}.dump(2) << "\n";
      } else {
        std::cout << poly << "\n";
      }
    } else if (*dim) {
      uint64_t d = 0;
      check(sl3web_dim(signature.c_str(), &d));
      std::cout << d << "\n";
    } else if (*enumerate) {
      char* out = nullptr;
      check(sl3web_enumerate(signature.c_str(), jobs, &out));
      std::cout << json::parse(take(out)).dump(2) << "\n";
    } else if (*grow) {
      sl3web_web* g = nullptr;
      check(sl3web_grow(signature.c_str(), state.c_str(), &g));
      WebPtr gp(g);
      char* out = nullptr;
      check(sl3web_web_to_json(g, 2, &out));
      std::cout << take(out) << "\n";
    } else if (*vbr || *vba) {
      WebPtr w = load(file);
      char* out = nullptr;
      sl3web_status s = sl3web_cheb_verify(w.get(), *vbr ? 1 : 2, k, &out);
      if (out) {
        json r = json::parse(take(out));
        for (const auto& line : r["lines"]) std::cerr << line.get<std::string>() << "\n";
        std::cout << (r["ok"].get<bool>() ? "OK" : "FAIL " + r.value("first_difference", std::string())) << "\n";
      }
      check(s);
    } else if (*mono) {
      char* out = nullptr;
      check(sl3web_cheb_monomial(k, kind == "U" ? 2 : kind == "T" ? 1 : 0, &out));
      std::cout << json::parse(take(out)).dump(2) << "\n";
    } else if (*rlist) {
      WebPtr w = load(file);
      char* out = nullptr;
      check(sl3web_redgraph_list(w.get(), exhaustive, !all, &out));
      std::cout << json::parse(take(out)).dump(2) << "\n";
    } else if (*rred) {
      WebPtr w = load(file);
      char* out = nullptr;
      check(sl3web_redgraph_reduce(w.get(), faces.c_str(), pairing.empty() ? nullptr : pairing.c_str(), &out));
      std::cout << json::parse(take(out)).dump(2) << "\n";
    } else if (*ccheck) {
      WebPtr w = load(file);
      char* out = nullptr;
      std::string ps = probes.empty() ? std::string() : json(probes).dump();
      check(sl3web_canon_check(w.get(), probes.empty() ? nullptr : ps.c_str(), &out));
      std::cout << json::parse(take(out)).dump(2) << "\n";
    } else if (*cprop) {
      char* out = nullptr;
      sl3web_status s = sl3web_canon_obstruction(jobs, full, &out);
      if (out) std::cout << take(out) << "\n";
      check(s);
    } else if (*render) {
      WebPtr w = load(file);
      char* out = nullptr;
      check(sl3web_web_render(w.get(), format.c_str(), &out));
      std::cout << take(out);
    } else if (*bench) {
      std::cout << "verb,input,strategy,wall_ms,states,flows\n";
      for (const char* q : {"commutative", "quantum"}) {
        WebPtr w = corpus("WxW");
        auto t0 = std::chrono::steady_clock::now();
        sl3web_combo* c = nullptr;
        check(sl3web_reduce(w.get(), std::string(q) == "quantum", 0, nullptr, nullptr, &c));
        ComboPtr cp(c);
        size_t n = 0;
        check(sl3web_combo_size(c, &n));
        std::printf("reduce,WxW,%s,%.3f,%zu,0\n", q, msSince(t0), n);
      }
      for (int t = 1; t <= k; ++t) {
        std::string name = "thick" + std::to_string(t) + "W";
        WebPtr w = corpus(name);
        for (const char* s : {"flows", "contraction", "discconfig"}) {
          auto t0 = std::chrono::steady_clock::now();
          char* out = nullptr;
          check(sl3web_expand(w.get(), s, &out));
          double ms = msSince(t0);
          json r = json::parse(take(out));
          std::printf("expand,%s,%s,%.3f,%zu,%s\n", name.c_str(), s, ms, r["states"].get<size_t>(),
                      r["flows"].get<std::string>().c_str());
          std::fflush(stdout);
        }
      }
    } else if (*corp) {
      std::filesystem::create_directories(dir);
      for (const char* name : {"hexW", "B", "WxW", "WxWxW", "WB", "WBB", "thick2W", "thick3W", "thick5W", "thick3WB"}) {
        WebPtr w = corpus(name);
        char* out = nullptr;
        check(sl3web_web_to_json(w.get(), 1, &out));
        std::ofstream f(std::filesystem::path(dir) / (std::string(name) + ".json"));
        f << take(out) << "\n";
        if (!f) throw Failure(1, "cannot write corpus file");
      }
    }
  } catch (const Failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
