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

#include "sl3web/sl3web.h"

#include <cstdlib>
#include <cstring>
#include <random>
#include <string>

#include "json.hpp"
#include "sl3web/chebops.hpp"
#include "sl3web/classical.hpp"
#include "sl3web/corpus.hpp"
#include "sl3web/discconfig.hpp"
#include "sl3web/dualcanon.hpp"
#include "sl3web/redgraph.hpp"
#include "sl3web/skein.hpp"
#include "sl3web/superimpose.hpp"
#include "sl3web/webenum.hpp"
#include "sl3web/webio.hpp"

struct sl3web_web {
  sl3web::Web w;
};

struct sl3web_combo {
  sl3web::WebCombo c;
};

using json = nlohmann::json;
using namespace sl3web;

namespace {

thread_local std::string lastError;

// Malformed arguments found before any computation starts.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NullError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
sl3web_status guarded(F&& f) {
  try {
    f();
    lastError.clear();
    return SL3WEB_OK;
  } catch (const NullError& e) {
    lastError = e.what();
    return SL3WEB_ERR_NULL;
  } catch (const InputError& e) {
    lastError = e.what();
    return SL3WEB_ERR_INPUT;
  } catch (const json::exception& e) {
    lastError = e.what();
    return SL3WEB_ERR_INPUT;
  } catch (const std::exception& e) {
    lastError = e.what();
    return SL3WEB_ERR_INVARIANT;
  }
}

// Parsing failures are input errors whatever the parser throws.
template <class T, class F>
T parsed(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p) {
  if (!p) throw NullError("null argument");
}

Signature signatureArg(const char* s) {
  need(s);
  return parsed<Signature>([&] { return Signature::parse(s); });
}

StateString stateArg(const Web& w, const char* s) {
  need(s);
  StateString j = parsed<StateString>([&] { return parseState(s); });
  if (static_cast<int>(j.size()) != w.numBoundary()) throw InputError("state length differs from the boundary");
  return j;
}

void requireUnclasped(const Web& w) {
  for (int m : multiplicities(w))
    if (m != 1) throw InputError("web has clasped boundary points; unclasp it first");
}

void requireNonElliptic(const Web& w) {
  if (w.numCrossings() > 0 || !isNonElliptic(w)) throw InputError("web is not a non-elliptic web");
}

Web corpusWeb(const std::string& name) {
  if (name == "hexW") return hexagonW();
  if (name == "B") return webB();
  if (name == "WxW") return superimpose({hexagonW(), hexagonW()});
  if (name == "WxWxW") return superimpose({hexagonW(), hexagonW(), hexagonW()});
  if (name == "WB") return cupUnionWB(1);
  if (name == "WBB") return cupUnionWB(2);
  if (name == "thick3WB") return cupUnion({webB(), honeycomb(3)});
  if (name.size() == 7 && name.rfind("thick", 0) == 0 && name.substr(6) == "W") {
    int k = name[5] - '0';
    if (k >= 1 && k <= 6) return honeycombUnclasped(k);
  }
  throw InputError("unknown corpus web: " + name);
}

json expansionJson(const Expansion& x, const std::string& strategy) {
  json j;
  j["signature"] = x.signature.str();
  j["strategy"] = strategy;
  j["coefficients"] = json::object();
  mpq_class flows = 0;
  for (const auto& [s, c] : x.coeffs) {
    j["coefficients"][stateString(s)] = c.toString();
    for (const auto& [e, q] : c.terms()) flows += q;
  }
  j["states"] = x.coeffs.size();
  j["flows"] = flows.get_str();
  return j;
}

json flowJson(const Flow& f) {
  json edges = json::array();
  for (size_t e = 0; e < f.dir.size(); ++e)
    if (f.dir[e]) edges.push_back({f.edgeHalf[e], f.dir[e]});
  return {{"exponent", f.exponent}, {"edges", edges}};
}

}  // namespace

extern "C" {

void sl3web_string_free(char* s) { std::free(s); }

const char* sl3web_last_error(void) { return lastError.c_str(); }

const char* sl3web_version(void) { return "1.0.0"; }

sl3web_status sl3web_web_from_json(const char* text, sl3web_web** out) {
  return guarded([&] {
    need(text);
    need(out);
    Web w = parsed<Web>([&] { return webFromJsonString(text); });
    *out = new sl3web_web{std::move(w)};
  });
}

sl3web_status sl3web_web_read_file(const char* path, sl3web_web** out) {
  return guarded([&] {
    need(path);
    need(out);
    Web w = parsed<Web>([&] { return readWebFile(path); });
    *out = new sl3web_web{std::move(w)};
  });
}

sl3web_status sl3web_web_corpus(const char* name, sl3web_web** out) {
  return guarded([&] {
    need(name);
    need(out);
    *out = new sl3web_web{corpusWeb(name)};
  });
}

sl3web_status sl3web_web_to_json(const sl3web_web* w, int indent, char** out) {
  return guarded([&] {
    need(w);
    need(out);
    *out = dup(webToJsonString(w->w, indent));
  });
}

sl3web_status sl3web_web_signature(const sl3web_web* w, char** out) {
  return guarded([&] {
    need(w);
    need(out);
    *out = dup(signatureOf(w->w).str());
  });
}

sl3web_status sl3web_web_is_non_elliptic(const sl3web_web* w, int* out) {
  return guarded([&] {
    need(w);
    need(out);
    *out = w->w.numCrossings() == 0 && isNonElliptic(w->w);
  });
}

sl3web_status sl3web_web_unclasp(const sl3web_web* w, sl3web_web** out) {
  return guarded([&] {
    need(w);
    need(out);
    *out = new sl3web_web{unclasp(w->w)};
  });
}

sl3web_status sl3web_web_render(const sl3web_web* w, const char* format, char** out) {
  return guarded([&] {
    need(w);
    need(format);
    need(out);
    std::string f = format;
    if (f == "svg") {
      *out = dup(webToSvg(w->w));
    } else if (f == "dot") {
      *out = dup(webToDot(w->w));
    } else {
      throw InputError("unknown render format: " + f);
    }
  });
}

void sl3web_web_free(sl3web_web* w) { delete w; }

sl3web_status sl3web_reduce(const sl3web_web* w, int quantum, uint64_t strategy_seed, sl3web_trace_fn trace,
                            void* user, sl3web_combo** out) {
  return guarded([&] {
    need(w);
    need(out);
    SkeinEngine e(quantum ? SkeinMode::Quantum : SkeinMode::Commutative);
    if (trace) e.setTrace([&](const std::string& s) { trace(s.c_str(), user); });
    *out = new sl3web_combo{e.reduce(w->w, strategy_seed)};
  });
}

sl3web_status sl3web_combo_size(const sl3web_combo* c, size_t* out) {
  return guarded([&] {
    need(c);
    need(out);
    *out = c->c.size();
  });
}

sl3web_status sl3web_combo_to_json(const sl3web_combo* c, char** out) {
  return guarded([&] {
    need(c);
    need(out);
    *out = dup(comboToJson(c->c).dump());
  });
}

sl3web_status sl3web_combo_term(const sl3web_combo* c, size_t i, sl3web_web** web, char** coeff) {
  return guarded([&] {
    need(c);
    if (i >= c->c.size()) throw InputError("term index out of range");
    auto it = std::next(c->c.terms.begin(), static_cast<long>(i));
    if (web) *web = new sl3web_web{c->c.webs.at(it->first)};
    if (coeff) *coeff = dup(it->second.toString());
  });
}

void sl3web_combo_free(sl3web_combo* c) { delete c; }

sl3web_status sl3web_eval_classical(const sl3web_web* w, uint64_t seed, int count, char** out) {
  return guarded([&] {
    need(w);
    need(out);
    if (count < 1) throw InputError("count must be positive");
    WebCombo nf = reduceToBasis(w->w);
    std::mt19937_64 rng(seed);
    json j;
    j["configurations"] = json::array();
    bool agree = true;
    for (int i = 0; i < count; ++i) {
      Configuration c = randomConfiguration(w->w, rng);
      mpq_class a = evalNumeric(w->w, c), b = evalComboNumeric(nf, c);
      agree = agree && a == b;
      j["configurations"].push_back({{"diagram", a.get_str()}, {"normal_form", b.get_str()}});
    }
    j["agree"] = agree;
    if (!agree) throw std::logic_error("normal form disagrees with the diagram: " + j.dump());
    *out = dup(j.dump());
  });
}

sl3web_status sl3web_expand(const sl3web_web* w, const char* strategy, char** out) {
  return guarded([&] {
    need(w);
    need(strategy);
    need(out);
    requireUnclasped(w->w);
    std::string s = strategy;
    Expansion x;
    if (s == "flows") {
      x = expandByFlows(w->w);
    } else if (s == "contraction") {
      x = expandByContraction(w->w);
    } else if (s == "discconfig") {
      if (!hasDiscFrame(w->w)) throw InputError("web has no disc frame");
      x = expandByDiscConfig(w->w);
    } else {
      throw InputError("unknown strategy: " + s);
    }
    *out = dup(expansionJson(x, s).dump());
  });
}

sl3web_status sl3web_coefficient(const sl3web_web* w, const char* state, char** out) {
  return guarded([&] {
    need(w);
    need(out);
    requireUnclasped(w->w);
    StateString j = stateArg(w->w, state);
    *out = dup(coefficientAt(w->w, j).toString());
  });
}

sl3web_status sl3web_flows_at(const sl3web_web* w, const char* state, int exponent, size_t limit, char** out) {
  return guarded([&] {
    need(w);
    need(out);
    requireUnclasped(w->w);
    StateString j = stateArg(w->w, state);
    auto flows = flowsAt(w->w, j, &exponent);
    json r;
    r["state"] = stateString(j);
    r["exponent"] = exponent;
    r["count"] = flows.size();
    r["flows"] = json::array();
    for (size_t i = 0; i < flows.size() && i < limit; ++i) r["flows"].push_back(flowJson(flows[i]));
    *out = dup(r.dump());
  });
}

sl3web_status sl3web_dominant_path(const sl3web_web* w, char** out) {
  return guarded([&] {
    need(w);
    need(out);
    requireUnclasped(w->w);
    *out = dup(stateString(dominantPath(w->w)));
  });
}

sl3web_status sl3web_dim(const char* signature, uint64_t* out) {
  return guarded([&] {
    need(out);
    *out = dimInvariants(signatureArg(signature));
  });
}

sl3web_status sl3web_enumerate(const char* signature, int jobs, char** out) {
  return guarded([&] {
    need(out);
    Signature s = signatureArg(signature);
    if (s.letters.size() > 12) throw InputError("enumeration is limited to 12 boundary points");
    BasisCatalog c = enumerateBasis(s, jobs < 1 ? 1 : jobs);
    json j;
    j["signature"] = s.str();
    j["dim"] = dimInvariants(s);
    j["size"] = c.size();
    j["webs"] = json::array();
    for (const auto& [p, w] : c.webs) j["webs"].push_back({{"path", stateString(p)}, {"web", webToJson(w)}});
    *out = dup(j.dump());
  });
}

sl3web_status sl3web_grow(const char* signature, const char* state, sl3web_web** out) {
  return guarded([&] {
    need(out);
    need(state);
    Signature s = signatureArg(signature);
    StateString j = parsed<StateString>([&] { return parseState(state); });
    if (j.size() != s.letters.size()) throw InputError("state length differs from the signature");
    Web w = parsed<Web>([&] { return growthInverse(s, j); });
    *out = new sl3web_web{std::move(w)};
  });
}

sl3web_status sl3web_cheb_verify(const sl3web_web* w, int kind, int kmax, char** out) {
  return guarded([&] {
    need(w);
    need(out);
    if (kind != 1 && kind != 2) throw InputError("kind must be 1 or 2");
    if (kmax < 0 || kmax > 6) throw InputError("k must lie in 0..6");
    parsed<int>([&] {
      requireSingleCycle(w->w);
      return 0;
    });
    ChebReport r = kind == 1 ? verifyBracelet(w->w, kmax) : verifyBand(w->w, kmax);
    json j;
    j["ok"] = r.ok;
    j["kind"] = kind == 1 ? "bracelet" : "band";
    j["lines"] = r.lines;
    if (!r.ok) j["first_difference"] = r.firstDifference;
    *out = dup(j.dump());
    if (!r.ok) throw std::logic_error("Chebyshev identity fails: " + r.firstDifference);
  });
}

sl3web_status sl3web_cheb_monomial(int k, int kind, char** out) {
  return guarded([&] {
    need(out);
    if (kind != 1 && kind != 2) throw InputError("kind must be 1 or 2");
    if (k < 1 || k > 40) throw InputError("k must lie in 1..40");
    ChebKind ck = kind == 1 ? ChebKind::First : ChebKind::Second;
    ChebCombination m = monomialInCheb(k, ck);
    BiPoly xk;
    xk.c[{k, 0}] = 1;
    if (!(m.expand() == xk)) throw std::logic_error("combination does not expand to x^k");
    json j;
    j["k"] = k;
    j["kind"] = kind == 1 ? "T" : "U";
    j["combination"] = m.str();
    j["positive"] = m.positive();
    *out = dup(j.dump());
  });
}

sl3web_status sl3web_redgraph_list(const sl3web_web* w, int exhaustive, int exact_only, char** out) {
  return guarded([&] {
    need(w);
    need(out);
    requireUnclasped(w->w);
    requireNonElliptic(w->w);
    std::vector<RedGraph> gs;
    if (exhaustive) {
      if (internalFaces(w->w).size() > 24) throw InputError("exhaustive search is limited to 24 internal faces");
      gs = exact_only ? exactRedGraphs(w->w) : enumerateRedGraphs(w->w);
    } else {
      gs = exactCycleRedGraphs(w->w);
    }
    json j;
    j["faces"] = internalFaces(w->w).size();
    j["count"] = gs.size();
    j["graphs"] = json::array();
    for (const auto& g : gs) j["graphs"].push_back(redGraphToJson(g, isExact(g) ? pairings(w->w, g) : std::vector<Pairing>{}));
    *out = dup(j.dump());
  });
}

sl3web_status sl3web_redgraph_reduce(const sl3web_web* w, const char* faces, const char* pairing, char** out) {
  return guarded([&] {
    need(w);
    need(faces);
    need(out);
    requireUnclasped(w->w);
    requireNonElliptic(w->w);
    std::vector<int> fs = json::parse(faces).get<std::vector<int>>();
    FaceIndex fi = faceIndex(w->w);
    RedGraph g;
    if (!makeRedGraph(w->w, fi, fs, &g)) throw InputError("face set is not a red graph");
    if (!isExact(g)) throw InputError("red graph is not exact");
    Pairing p;
    if (pairing && std::strcmp(pairing, "null") != 0) {
      for (const auto& q : json::parse(pairing)) p.emplace_back(q.at(0).get<int>(), q.at(1).get<int>());
    } else {
      auto ps = pairings(w->w, g, 1);
      if (ps.empty()) throw InputError("red graph has no pairing");
      p = ps[0];
    }
    Web r = parsed<Web>([&] { return gReduction(w->w, g, p); });
    WebCombo c = reduceToBasis(r);
    json j;
    j["graph"] = redGraphToJson(g, {p});
    j["g_reduction"] = webToJson(r);
    j["boundary_y"] = hasBoundaryY(r);
    j["signature_preserved"] = signatureOf(r) == signatureOf(w->w);
    j["reduced"] = comboToJson(c);
    *out = dup(j.dump());
    if (!(signatureOf(r) == signatureOf(w->w))) throw std::logic_error("G-reduction changed the signature");
  });
}

sl3web_status sl3web_canon_check(const sl3web_web* w, const char* probes, char** out) {
  return guarded([&] {
    need(w);
    need(out);
    requireUnclasped(w->w);
    requireNonElliptic(w->w);
    std::vector<StateString> ps;
    if (probes && std::strcmp(probes, "null") != 0)
      for (const auto& s : json::parse(probes)) ps.push_back(stateArg(w->w, s.get<std::string>().c_str()));
    CanonVerdict v = negativeExponentCheck(w->w, ps);
    checkWitness(w->w, v);
    *out = dup(verdictToJson(v).dump());
  });
}

sl3web_status sl3web_canon_obstruction(int jobs, int classify_thick5, char** out) {
  bool ok = false;
  sl3web_status s = guarded([&] {
    need(out);
    ObstructionOptions o;
    o.jobs = jobs;
    o.classifyThick5 = classify_thick5 != 0;
    json r = obstructionReport(o);
    ok = r["ok"].get<bool>();
    *out = dup(r.dump(2));
  });
  if (s == SL3WEB_OK && !ok) {
    lastError = "a sub-check failed";
    return SL3WEB_ERR_INVARIANT;
  }
  return s;
}

}  // extern "C"
