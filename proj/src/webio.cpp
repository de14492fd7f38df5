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


#include "sl3web/webio.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>

namespace sl3web {

using nlohmann::json;

namespace {

const char* kindName(VertexKind k) {
  switch (k) {
    case VertexKind::Boundary:
      return "boundary";
    case VertexKind::Internal:
      return "internal";
    default:
      return "crossing";
  }
}

VertexKind kindFromName(const std::string& s) {
  if (s == "boundary") return VertexKind::Boundary;
  if (s == "internal") return VertexKind::Internal;
  if (s == "crossing") return VertexKind::Crossing;
  throw WebError("unknown vertex kind '" + s + "'");
}

Color colorFromName(const std::string& s) {
  if (s == "w" || s == "white") return Color::White;
  if (s == "b" || s == "black") return Color::Black;
  throw WebError("unknown color '" + s + "'");
}

}  // namespace

json webToJson(const Web& w0) {
  Web w = w0.compacted();
  json j;
  j["signature"] = signatureOf(w).str();
  j["marked"] = 0;
  json verts = json::array();
  json hes = json::array();
  std::vector<int> newId(w.numHalfEdges(), -1);
  int next = 0;
  for (int v = 0; v < w.numVertices(); ++v)
    for (int h : w.rot[v]) newId[h] = next++;
  for (int v = 0; v < w.numVertices(); ++v) {
    json x = {{"id", v}, {"color", std::string(1, colorChar(w.color[v]))}, {"kind", kindName(w.kind[v])}};
    if (w.isCrossing(v)) x["over"] = w.over[v];
    verts.push_back(x);
    for (int h : w.rot[v])
      hes.push_back({{"id", newId[h]}, {"twin", newId[w.twin[h]]}, {"next", newId[w.rotNext(h)]}, {"vertex", v}});
  }
  j["vertices"] = verts;
  j["halfEdges"] = hes;
  j["boundary"] = w.boundary;
  json mult = json::object();
  for (int i = 0; i < w.numBoundary(); ++i) mult[std::to_string(i)] = w.degree(w.boundary[i]);
  j["multiplicities"] = mult;
  if (w.loops) j["loops"] = w.loops;
  return j;
}

Web webFromJson(const json& j) {
  try {
    Web w;
    const auto& verts = j.at("vertices");
    std::map<int, int> vid;
    for (const auto& x : verts) {
      int id = x.at("id").get<int>();
      if (vid.count(id)) throw WebError("duplicate vertex id");
      int v = w.addVertex(kindFromName(x.at("kind").get<std::string>()),
                          colorFromName(x.at("color").get<std::string>()));
      if (x.contains("over")) w.over[v] = static_cast<int8_t>(x["over"].get<int>());
      vid[id] = v;
    }
    const auto& hes = j.at("halfEdges");
    std::map<int, int> hid;
    std::vector<int> twinId, nextId, firstAt(w.numVertices(), -1);
    for (const auto& x : hes) {
      int id = x.at("id").get<int>();
      if (hid.count(id)) throw WebError("duplicate half-edge id");
      auto it = vid.find(x.at("vertex").get<int>());
      if (it == vid.end()) throw WebError("half-edge at unknown vertex");
      int h = static_cast<int>(w.hv.size());
      w.hv.push_back(it->second);
      w.twin.push_back(-1);
      hid[id] = h;
      twinId.push_back(x.at("twin").get<int>());
      nextId.push_back(x.at("next").get<int>());
      if (firstAt[it->second] < 0) firstAt[it->second] = h;
    }
    int H = static_cast<int>(w.hv.size());
    std::vector<int> nxt(H);
    for (int h = 0; h < H; ++h) {
      auto t = hid.find(twinId[h]);
      auto n = hid.find(nextId[h]);
      if (t == hid.end() || n == hid.end()) throw WebError("dangling half-edge reference");
      w.twin[h] = t->second;
      nxt[h] = n->second;
      if (w.hv[nxt[h]] != w.hv[h]) throw WebError("rotation leaves its vertex");
    }
    for (int h = 0; h < H; ++h)
      if (w.twin[w.twin[h]] != h || w.twin[h] == h) throw WebError("twins are not an involution");
    for (int v = 0; v < w.numVertices(); ++v) {
      if (firstAt[v] < 0) continue;
      int h = firstAt[v];
      do {
        w.rot[v].push_back(h);
        h = nxt[h];
        if (w.rot[v].size() > static_cast<size_t>(H)) throw WebError("rotation does not cycle");
      } while (h != firstAt[v]);
    }
    size_t listed = 0;
    for (const auto& r : w.rot) listed += r.size();
    if (listed != static_cast<size_t>(H)) throw WebError("rotation cycles do not cover the half-edges");
    for (const auto& b : j.at("boundary")) {
      auto it = vid.find(b.get<int>());
      if (it == vid.end()) throw WebError("boundary lists an unknown vertex");
      w.boundary.push_back(it->second);
    }
    int marked = j.value("marked", 0);
    if (marked < 0 || (marked > 0 && marked >= w.numBoundary())) throw WebError("marked point out of range");
    if (marked) w = rotateMarked(w, marked);
    w.loops = j.value("loops", 0);
    if (j.contains("signature") && Signature::parse(j["signature"].get<std::string>()).letters != signatureOf(w).letters)
      throw WebError("signature does not match boundary colors");
    w.validate();
    return w;
  } catch (const json::exception& e) {
    throw WebError(std::string("malformed web JSON: ") + e.what());
  }
}

std::string webToJsonString(const Web& w, int indent) { return webToJson(w).dump(indent); }

Web webFromJsonString(const std::string& s) {
  json j = json::parse(s, nullptr, false);
  if (j.is_discarded()) throw WebError("input is not JSON");
  return webFromJson(j);
}

Web readWebFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw WebError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return webFromJsonString(ss.str());
}

void writeWebFile(const std::string& path, const Web& w) {
  std::ofstream out(path);
  if (!out) throw WebError("cannot write " + path);
  out << webToJsonString(w, 1) << "\n";
}

json comboToJson(const WebCombo& c) {
  json terms = json::array();
  for (const auto& [key, coeff] : c.terms)
    terms.push_back({{"coeff", coeff.toString()}, {"web", webToJson(c.webs.at(key))}});
  return {{"terms", terms}};
}

namespace {

// Boundary on the unit circle, internal vertices on inner circles by
// distance from the boundary.
std::vector<std::pair<double, double>> circleLayout(const Web& w) {
  int V = w.numVertices();
  std::vector<int> depth(V, -1);
  std::vector<std::pair<double, double>> pos(V, {0.0, 0.0});
  std::queue<int> q;
  int n = w.numBoundary();
  const double pi = std::acos(-1.0);
  for (int i = 0; i < n; ++i) {
    int b = w.boundary[i];
    depth[b] = 0;
    double a = pi / 2 - 2 * pi * i / std::max(n, 1);
    pos[b] = {std::cos(a), std::sin(a)};
    q.push(b);
  }
  int maxDepth = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int h : w.rot[v]) {
      int u = w.other(h);
      if (depth[u] >= 0) continue;
      depth[u] = depth[v] + 1;
      maxDepth = std::max(maxDepth, depth[u]);
      q.push(u);
    }
  }
  std::map<int, std::vector<int>> rings;
  for (int v = 0; v < V; ++v)
    if (w.alive[v] && depth[v] != 0) rings[depth[v] < 0 ? maxDepth + 1 : depth[v]].push_back(v);
  for (auto& [d, vs] : rings) {
    double r = 1.0 - 0.8 * d / (maxDepth + 1.0);
    for (size_t k = 0; k < vs.size(); ++k) {
      double a = pi / 2 - 2 * pi * (k + 0.5 * d) / vs.size();
      pos[vs[k]] = {r * std::cos(a), r * std::sin(a)};
    }
  }
  return pos;
}

}  // namespace

std::string webToDot(const Web& w0) {
  Web w = w0.compacted();
  std::ostringstream o;
  o << "graph web {\n  node [shape=circle, label=\"\", width=0.15];\n";
  for (int v = 0; v < w.numVertices(); ++v) {
    o << "  v" << v << " [";
    if (w.isBoundary(v)) {
      o << "shape=box, label=\"";
      for (int i = 0; i < w.numBoundary(); ++i)
        if (w.boundary[i] == v) o << i;
      o << "\", ";
    }
    o << "style=filled, fillcolor=" << (w.color[v] == Color::White ? "white" : "black");
    if (w.isCrossing(v)) o << ", shape=point";
    o << "];\n";
  }
  for (int h = 0; h < w.numHalfEdges(); ++h)
    if (h < w.twin[h]) o << "  v" << w.hv[h] << " -- v" << w.hv[w.twin[h]] << ";\n";
  o << "}\n";
  return o.str();
}

std::string webToSvg(const Web& w0) {
  Web w = w0.compacted();
  auto pos = circleLayout(w);
  auto px = [](double x) { return 200 + 180 * x; };
  auto py = [](double y) { return 200 - 180 * y; };
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
  o << "<circle cx=\"200\" cy=\"200\" r=\"180\" fill=\"none\" stroke=\"#bbb\"/>\n";
  for (int h = 0; h < w.numHalfEdges(); ++h) {
    if (h > w.twin[h]) continue;
    auto [x1, y1] = pos[w.hv[h]];
    auto [x2, y2] = pos[w.hv[w.twin[h]]];
    o << "<line x1=\"" << px(x1) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(x2) << "\" y2=\"" << py(y2)
      << "\" stroke=\"black\"/>\n";
  }
  for (int v = 0; v < w.numVertices(); ++v) {
    auto [x, y] = pos[v];
    double r = w.isCrossing(v) ? 2 : 5;
    o << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"" << r << "\" stroke=\"black\" fill=\""
      << (w.color[v] == Color::White ? "white" : "black") << "\"/>\n";
  }
  if (w.numBoundary() > 0) {
    auto [x, y] = pos[w.boundary[0]];
    o << "<circle cx=\"" << px(x * 1.06) << "\" cy=\"" << py(y * 1.06) << "\" r=\"3\" fill=\"green\"/>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace sl3web
