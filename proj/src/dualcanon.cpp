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

#include "sl3web/dualcanon.hpp"

#include <future>
#include <map>

#include "sl3web/chebops.hpp"
#include "sl3web/corpus.hpp"
#include "sl3web/discconfig.hpp"
#include "sl3web/redgraph.hpp"
#include "sl3web/skein.hpp"
#include "sl3web/superimpose.hpp"

namespace sl3web {

const char* canonStatusName(CanonStatus s) {
  switch (s) {
    case CanonStatus::DualCanonical: return "dual_canonical";
    case CanonStatus::NotDualCanonical: return "not_dual_canonical";
    default: return "unknown";
  }
}

namespace {

bool nonNegativeExponent(const LaurentPoly& p, int* exponent) {
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    if (it->first >= 0) {
      *exponent = it->first;
      return true;
    }
  return false;
}

}  // namespace

CanonVerdict negativeExponentCheck(const Web& w, const std::vector<StateString>& probes, uint64_t seed) {
  CanonVerdict v;
  v.leader = dominantPath(w, seed);
  auto consider = [&](const StateString& j, const LaurentPoly& c) {
    if (j >= v.leader || c.isZero()) return false;
    int e;
    if (!nonNegativeExponent(c, &e)) return false;
    v.status = CanonStatus::NotDualCanonical;
    v.evidence = "witness";
    v.witness = j;
    v.coefficient = c;
    v.witnessExponent = e;
    return true;
  };
  if (probes.empty()) {
    Expansion x = expandByFlows(w, seed);
    for (auto it = x.coeffs.rbegin(); it != x.coeffs.rend(); ++it)
      if (consider(it->first, it->second)) return v;
  } else {
    for (const auto& j : probes)
      if (consider(j, coefficientAt(w, j, seed))) return v;
  }
  if (!hasExactRedGraph(w)) {
    v.status = CanonStatus::DualCanonical;
    v.evidence = "no exact red graph";
    return v;
  }
  v.evidence = probes.empty() ? "exact red graph present" : "probed states satisfy the property";
  return v;
}

CanonVerdict cupClosure(const std::vector<CanonVerdict>& operands) {
  if (operands.empty()) throw WebError("cup closure needs at least one operand");
  CanonVerdict v;
  for (const auto& o : operands)
    if (o.status != CanonStatus::DualCanonical) {
      v.evidence = "operand not certified";
      return v;
    }
  v.status = CanonStatus::DualCanonical;
  v.evidence = "cup closure";
  return v;
}

void checkWitness(const Web& w, const CanonVerdict& v) {
  if (v.status != CanonStatus::NotDualCanonical) return;
  if (v.witness >= dominantPath(w)) throw WebError("witness is not below the leading state");
  LaurentPoly c = coefficientAt(w, v.witness);
  if (!(c == v.coefficient) || c.coeff(v.witnessExponent) == 0 || v.witnessExponent < 0)
    throw WebError("witness coefficient does not violate the negative exponent property");
}

nlohmann::json verdictToJson(const CanonVerdict& v) {
  nlohmann::json j;
  j["status"] = canonStatusName(v.status);
  j["evidence"] = v.evidence;
  if (!v.leader.empty()) j["leader"] = stateString(v.leader);
  if (v.status == CanonStatus::NotDualCanonical) {
    j["witness"] = stateString(v.witness);
    j["coefficient"] = v.coefficient.toString();
    j["exponent"] = v.witnessExponent;
  }
  return j;
}

namespace {

struct NonYTerms {
  size_t cycles = 0, paired = 0, withY = 0, withoutY = 0;
  std::map<std::string, LaurentPoly> terms;  // rotation class -> summed coefficient
  std::map<std::string, Web> webs;
  std::vector<std::string> graphs;           // red graphs whose W_G has no boundary Y
};

// Pure-cycle exact red graphs of w; W_G with a boundary Y are set aside
// unless reduceAll, the others are reduced and their terms without a
// boundary Y collected.
NonYTerms nonYReductions(const Web& w, bool reduceAll) {
  NonYTerms out;
  FaceIndex fi = faceIndex(w);
  forEachInducedFaceCycle(w, fi, 6, [&](const std::vector<int>& cyc) {
    RedGraph g;
    if (!makeRedGraph(w, fi, cyc, &g) || !isExact(g)) return;
    ++out.cycles;
    auto ps = pairings(w, g, 4);
    if (!ps.empty()) ++out.paired;
    for (const auto& p : ps) {
      Web r = gReduction(w, g, p);
      bool y = hasBoundaryY(r);
      y ? ++out.withY : ++out.withoutY;
      if (y && !reduceAll) continue;
      if (!y) out.graphs.push_back(g.str());
      WebCombo c = reduceToBasis(r);
      for (const auto& [k, co] : c.terms) {
        const Web& x = c.webs.at(k);
        if (hasBoundaryY(x)) continue;
        std::string key = rotationClassKey(x);
        out.terms[key] += co;
        out.webs.emplace(key, x);
      }
    }
  });
  for (auto it = out.terms.begin(); it != out.terms.end();)
    it = it->second.isZero() ? out.terms.erase(it) : std::next(it);
  return out;
}

nlohmann::json flowJson(const Flow& f) {
  nlohmann::json j = nlohmann::json::array();
  for (size_t e = 0; e < f.dir.size(); ++e)
    if (f.dir[e]) j.push_back({f.edgeHalf[e], f.dir[e]});
  return j;
}

LaurentPoly comboCoefficient(const WebCombo& c, const std::string& rotationKey) {
  LaurentPoly s;
  for (const auto& [k, co] : c.terms)
    if (rotationClassKey(unclasp(c.webs.at(k))) == rotationKey) s += co;
  return s;
}

struct ObstructionInputs {
  Web w, b, wb, wbb, thick3, thick5, thick3b;
};

ObstructionInputs obstructionInputs() {
  ObstructionInputs in;
  in.w = hexagonW();
  in.b = unclasp(webB());
  in.wb = cupUnionWB(1);
  in.wbb = cupUnionWB(2);
  in.thick3 = honeycombUnclasped(3);
  in.thick5 = honeycombUnclasped(5);
  in.thick3b = cupUnion({webB(), honeycomb(3)});
  return in;
}

nlohmann::json thick5Coefficient(const ObstructionInputs& in) {
  nlohmann::json j;
  StateString d5 = dominantPath(in.thick5), dw = dominantPath(in.wbb);
  j["dominant_thick5"] = stateString(d5);
  j["dominant_wbb"] = stateString(dw);
  j["paths_match"] = d5 == dominantThick5Expected() && dw == dominantWBBExpected();
  Signature s5 = Signature::parse(signatureS5());
  j["signatures_match"] = signatureOf(in.thick5) == s5 && signatureOf(in.wbb) == s5;
  LaurentPoly c = coefficientAt(in.thick5, dw);
  mpq_class c0 = c.coeff(0);
  j["state"] = stateString(dw);
  j["coefficient"] = c.toString();
  j["constant_term"] = c0.get_str();
  int zero = 0;
  auto flows = flowsAt(in.thick5, dw, &zero);
  j["weight_one_flows"] = flows.size();
  j["exhibited_flows"] = nlohmann::json::array();
  for (size_t i = 0; i < flows.size() && i < 6; ++i) j["exhibited_flows"].push_back(flowJson(flows[i]));
  DiscFrame df = discFrame(in.thick5);
  int u = 0, e = 0;
  offsetExponent(df, dw, &u, &e);
  j["U"] = u;
  j["E"] = e;
  j["twoU_minus_E"] = 2 * u - e;
  j["pass"] = j["paths_match"].get<bool>() && j["signatures_match"].get<bool>() && c0 >= 6 &&
              flows.size() >= 6 && 2 * u - e == 8;
  return j;
}

nlohmann::json thick3Decomposition(const ObstructionInputs& in) {
  nlohmann::json j;
  NonYTerms t = nonYReductions(in.thick3, true);
  j["exact_cycle_graphs"] = t.cycles;
  j["paired"] = t.paired;
  j["reductions_with_boundary_y"] = t.withY;
  j["reductions_without_boundary_y"] = t.withoutY;
  j["graphs_without_boundary_y"] = t.graphs;
  std::string wbKey = rotationClassKey(in.wb);
  j["terms_without_boundary_y"] = nlohmann::json::array();
  for (const auto& [k, co] : t.terms)
    j["terms_without_boundary_y"].push_back({{"coefficient", co.toString()}, {"is_w_cup_b", k == wbKey}});
  bool onlyWB = t.terms.size() == 1 && t.terms.begin()->first == wbKey;
  j["correction_web_is_w_cup_b"] = onlyWB;

  // the correction coefficient is read off the band expansion at that web
  WebCombo b3 = band(in.w, 3);
  LaurentPoly a1 = -comboCoefficient(b3, onlyWB ? t.terms.begin()->first : wbKey);
  j["band3_terms"] = b3.size();
  j["a1"] = a1.toString();
  LaurentPoly cross = coefficientAt(in.thick3, dominantPath(in.wb));
  j["thick3_coefficient_at_w_cup_b"] = cross.toString();
  j["a1_matches_constant_term"] = a1 == LaurentPoly(cross.coeff(0));
  j["pass"] = onlyWB && a1 == LaurentPoly(cross.coeff(0)) && a1.terms().size() == 1 &&
              a1.terms().begin()->first == 0;
  return j;
}

nlohmann::json thick5Classification(const ObstructionInputs& in) {
  nlohmann::json j;
  NonYTerms t = nonYReductions(in.thick5, false);
  j["exact_cycle_graphs"] = t.cycles;
  j["paired"] = t.paired;
  j["reductions_with_boundary_y"] = t.withY;
  j["reductions_without_boundary_y"] = t.withoutY;
  std::string wbbKey = rotationClassKey(in.wbb), t3bKey = rotationClassKey(in.thick3b);
  j["terms_without_boundary_y"] = nlohmann::json::array();
  for (const auto& [k, co] : t.terms)
    j["terms_without_boundary_y"].push_back(
        {{"coefficient", co.toString()}, {"is_w_cup_b_cup_b", k == wbbKey}, {"is_thick3_cup_b", k == t3bKey}});
  bool ok = t.terms.size() == 2 && t.terms.count(wbbKey) && t.terms.count(t3bKey);
  j["pass"] = ok;
  return j;
}

}  // namespace

nlohmann::json obstructionReport(const ObstructionOptions& opt) {
  ObstructionInputs in = obstructionInputs();
  auto policy = opt.jobs > 1 ? std::launch::async : std::launch::deferred;
  auto coefficient = std::async(policy, [&] { return thick5Coefficient(in); });
  auto decomposition = std::async(policy, [&] { return thick3Decomposition(in); });
  std::future<nlohmann::json> classification;
  if (opt.classifyThick5) classification = std::async(policy, [&] { return thick5Classification(in); });

  nlohmann::json r;
  r["coefficient_six"] = coefficient.get();
  r["thick3_decomposition"] = decomposition.get();

  // Band5 = U5(W, B): x^5 -> Thick5, x^3 y -> Thick3 u B, x y^2 -> W u B u B
  ChebPoly u5 = chebU(5);
  auto at = [&](int i, int k) {
    auto it = u5.p.c.find({i, k});
    return it == u5.p.c.end() ? int64_t{0} : it->second;
  };
  int64_t c1 = -at(3, 1), c2 = -at(1, 2);
  nlohmann::json ob;
  ob["c1"] = c1;
  ob["c2"] = c2;
  LaurentPoly a1 = LaurentPoly::parse(r["thick3_decomposition"]["a1"].get<std::string>());
  mpq_class value = c1 * a1.coeff(0) + c2;
  mpq_class six(r["coefficient_six"]["constant_term"].get<std::string>());
  ob["a1"] = a1.toString();
  ob["c1_a1_plus_c2"] = value.get_str();
  ob["bound"] = 6;
  ob["pass"] = c1 == 4 && c2 == -3 && value == 5 && value < 6 && six >= 6;
  r["obstruction"] = ob;

  nlohmann::json canon;
  canon["W"] = verdictToJson(negativeExponentCheck(in.w));
  CanonVerdict vb = negativeExponentCheck(in.b);
  canon["B"] = verdictToJson(vb);
  CanonVerdict vw = negativeExponentCheck(in.w);
  canon["W_cup_B_cup_B"] = verdictToJson(cupClosure({vw, vb, vb}));
  CanonVerdict v5 = negativeExponentCheck(in.thick5, {dominantPath(in.wbb)});
  checkWitness(in.thick5, v5);
  canon["Thick5"] = verdictToJson(v5);
  CanonVerdict v3 = negativeExponentCheck(in.thick3, {dominantPath(in.wb)});
  checkWitness(in.thick3, v3);
  canon["Thick3"] = verdictToJson(v3);
  canon["pass"] = vw.status == CanonStatus::DualCanonical && vb.status == CanonStatus::DualCanonical &&
                  v5.status == CanonStatus::NotDualCanonical && v3.status == CanonStatus::NotDualCanonical;
  r["verdicts"] = canon;

  if (opt.classifyThick5) {
    r["thick5_classification"] = classification.get();
  } else {
    r["thick5_classification"] = {{"skipped", true}};
  }
  bool ok = true;
  for (const auto& [k, v] : r.items())
    if (v.contains("pass")) ok = ok && v["pass"].get<bool>();
  r["ok"] = ok;
  return r;
}

}  // namespace sl3web
