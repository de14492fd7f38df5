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


#include "sl3web/webenum.hpp"

#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "sl3web/corpus.hpp"
#include "sl3web/webio.hpp"

namespace sl3web {

WeightMultiset tensorWith(const WeightMultiset& m, Color c) {
  WeightMultiset r;
  for (const auto& [w, k] : m.mult) {
    auto [a, b] = w;
    if (c == Color::White) {
      r.mult[{a + 1, b}] += k;
      if (a > 0) r.mult[{a - 1, b + 1}] += k;
      if (b > 0) r.mult[{a, b - 1}] += k;
    } else {
      r.mult[{a, b + 1}] += k;
      if (b > 0) r.mult[{a + 1, b - 1}] += k;
      if (a > 0) r.mult[{a - 1, b}] += k;
    }
  }
  return r;
}

WeightMultiset tensorPower(const Signature& s) {
  WeightMultiset m;
  m.mult[{0, 0}] = 1;
  for (Color c : s.letters) m = tensorWith(m, c);
  return m;
}

uint64_t dimInvariants(const Signature& s) {
  auto m = tensorPower(s);
  auto it = m.mult.find({0, 0});
  return it == m.mult.end() ? 0 : it->second;
}

namespace {

// U arc inserted before boundary index i.
Web attachU(const Web& base, int i, Color first) {
  Web w = base;
  int a = w.addVertex(VertexKind::Boundary, first);
  int b = w.addVertex(VertexKind::Boundary, opposite(first));
  w.link(w.newHalfEdge(a), w.newHalfEdge(b));
  w.boundary.insert(w.boundary.begin() + i, {a, b});
  return w;
}

// Boundary point i becomes a vertex with two new boundary legs.
Web attachY(const Web& base, int i) {
  Web w = base;
  int p = w.boundary[i];
  w.kind[p] = VertexKind::Internal;
  Color c = opposite(w.color[p]);
  int b1 = w.addVertex(VertexKind::Boundary, c);
  int b2 = w.addVertex(VertexKind::Boundary, c);
  w.link(w.newHalfEdge(p), w.newHalfEdge(b1));
  w.link(w.newHalfEdge(p), w.newHalfEdge(b2));
  w.boundary[i] = b1;
  w.boundary.insert(w.boundary.begin() + i + 1, b2);
  return w;
}

// Boundary points i, i + 1 become the two vertices of an H.
Web attachH(const Web& base, int i) {
  Web w = base;
  int p = w.boundary[i];
  int q = w.boundary[i + 1];
  w.kind[p] = VertexKind::Internal;
  w.kind[q] = VertexKind::Internal;
  int b1 = w.addVertex(VertexKind::Boundary, opposite(w.color[p]));
  int b2 = w.addVertex(VertexKind::Boundary, opposite(w.color[q]));
  w.link(w.newHalfEdge(p), w.newHalfEdge(b1));
  int hp = w.newHalfEdge(p);
  int hq = w.newHalfEdge(q);
  w.link(hp, hq);
  w.link(w.newHalfEdge(q), w.newHalfEdge(b2));
  w.boundary[i] = b1;
  w.boundary[i + 1] = b2;
  return w;
}

struct ClassStore {
  std::mutex mu;
  std::map<std::string, std::vector<Web>> webs;  // signature string -> webs
  std::set<std::pair<int, int>> done;            // (length, whites)
};

ClassStore& store() {
  static ClassStore s;
  return s;
}

std::vector<Signature> signaturesOf(int n, int whites) {
  std::vector<Signature> out;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != whites) continue;
    Signature s;
    for (int i = 0; i < n; ++i) s.letters.push_back(mask >> i & 1 ? Color::White : Color::Black);
    out.push_back(s);
  }
  return out;
}

const std::vector<Web>& classWebs(const std::string& sig);

void computeClass(int n, int whites) {
  auto& st = store();
  {
    std::lock_guard<std::mutex> lock(st.mu);
    if (st.done.count({n, whites})) return;
  }
  int blacks = n - whites;
  std::map<std::string, std::vector<Web>> found;
  std::map<std::string, std::set<std::string>> keys;
  std::deque<std::pair<std::string, Web>> queue;
  auto offer = [&](const Web& w) {
    if (!isNonElliptic(w)) return;
    Web c = w.compacted();
    std::string sig = signatureOf(c).str();
    if (!keys[sig].insert(canonicalKey(c)).second) return;
    found[sig].push_back(c);
    queue.emplace_back(sig, c);
  };
  if (n == 0) {
    found[""] = {emptyWeb()};
  } else if (((whites - blacks) % 3 + 3) % 3 == 0) {
    for (const Signature& s : signaturesOf(n, whites)) {
      const auto& L = s.letters;
      for (int i = 0; i + 1 < n; ++i) {
        Signature r = s;
        if (L[i] != L[i + 1]) {
          r.letters.erase(r.letters.begin() + i, r.letters.begin() + i + 2);
          for (const Web& b : classWebs(r.str())) offer(attachU(b, i, L[i]));
        } else {
          r.letters.erase(r.letters.begin() + i + 1);
          r.letters[i] = opposite(L[i]);
          for (const Web& b : classWebs(r.str())) offer(attachY(b, i));
        }
      }
    }
    while (!queue.empty()) {
      auto [sig, w] = queue.front();
      queue.pop_front();
      for (int i = 0; i + 1 < n; ++i)
        if (sig[i] != sig[i + 1]) offer(attachH(w, i));
    }
  }
  std::lock_guard<std::mutex> lock(st.mu);
  for (auto& [sig, ws] : found) st.webs[sig] = std::move(ws);
  st.done.insert({n, whites});
}

const std::vector<Web>& classWebs(const std::string& sig) {
  Signature s = Signature::parse(sig);
  computeClass(static_cast<int>(sig.size()), s.whites());
  auto& st = store();
  std::lock_guard<std::mutex> lock(st.mu);
  static const std::vector<Web> none;
  auto it = st.webs.find(sig);
  return it == st.webs.end() ? none : it->second;
}

}  // namespace

std::vector<Web> nonEllipticWebs(const Signature& s) { return classWebs(s.str()); }

const Web& BasisCatalog::lookup(const StateString& j) const {
  auto it = webs.find(j);
  if (it == webs.end()) throw WebError("state " + stateString(j) + " is not a dominant path for " + signature.str());
  return it->second;
}

nlohmann::json catalogToJson(const BasisCatalog& c) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [j, w] : c.webs) entries.push_back({{"path", stateString(j)}, {"web", webToJson(w)}});
  return {{"signature", c.signature.str()}, {"dim", c.size()}, {"entries", entries}};
}

BasisCatalog catalogFromJson(const nlohmann::json& j) {
  BasisCatalog c;
  try {
    c.signature = Signature::parse(j.at("signature").get<std::string>());
    for (const auto& e : j.at("entries")) {
      StateString path = parseState(e.at("path").get<std::string>());
      if (!c.webs.emplace(path, webFromJson(e.at("web"))).second) throw WebError("catalog repeats a path");
    }
  } catch (const nlohmann::json::exception& e) {
    throw WebError(std::string("malformed catalog: ") + e.what());
  }
  return c;
}

void saveCatalog(const std::string& dir, const BasisCatalog& c) {
  namespace fs = std::filesystem;
  fs::path p = fs::path(dir) / (c.signature.str().empty() ? "empty" : c.signature.str());
  fs::create_directories(p);
  fs::path tmp = p / "catalog.json.tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw WebError("cannot write catalog under " + p.string());
    out << catalogToJson(c).dump() << "\n";
  }
  fs::rename(tmp, p / "catalog.json");
}

bool loadCatalog(const std::string& dir, const Signature& s, BasisCatalog* out) {
  namespace fs = std::filesystem;
  fs::path p = fs::path(dir) / (s.str().empty() ? "empty" : s.str()) / "catalog.json";
  std::ifstream in(p);
  if (!in) return false;
  std::stringstream ss;
  ss << in.rdbuf();
  auto j = nlohmann::json::parse(ss.str(), nullptr, false);
  if (j.is_discarded()) return false;
  BasisCatalog c = catalogFromJson(j);
  if (c.signature.letters != s.letters || c.size() != dimInvariants(s)) return false;
  *out = std::move(c);
  return true;
}

BasisCatalog enumerateBasis(const Signature& s, int jobs) {
  const char* cache = std::getenv("SL3WEB_CACHE_DIR");
  BasisCatalog cat;
  if (cache && *cache && loadCatalog(cache, s, &cat)) return cat;
  uint64_t dim = dimInvariants(s);
  std::vector<Web> ws = nonEllipticWebs(s);
  if (ws.size() != dim)
    throw WebError("generated " + std::to_string(ws.size()) + " non-elliptic webs for " + s.str() +
                   ", dimension is " + std::to_string(dim));
  std::vector<StateString> paths(ws.size());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(ws.size())));
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (size_t k = t; k < ws.size(); k += jobs) paths[k] = dominantPath(ws[k]);
    });
  for (auto& th : pool) th.join();
  cat.signature = s;
  for (size_t k = 0; k < ws.size(); ++k)
    if (!cat.webs.emplace(paths[k], ws[k]).second)
      throw WebError("two basis webs share the dominant path " + stateString(paths[k]));
  if (cache && *cache) saveCatalog(cache, cat);
  return cat;
}

namespace {

Web growRec(std::vector<Color> s, std::vector<int> j) {
  int n = static_cast<int>(s.size());
  if (n == 0) return emptyWeb();
  for (int i = 0; i + 1 < n; ++i) {
    int a = j[i], b = j[i + 1];
    if (s[i] == s[i + 1]) {
      int merged;
      if (a == 0 && b == -1) {
        merged = -1;
      } else if (a == 1 && b == -1) {
        merged = 0;
      } else if (a == 1 && b == 0) {
        merged = 1;
      } else {
        continue;
      }
      Color c = s[i];
      s.erase(s.begin() + i + 1);
      s[i] = opposite(c);
      j.erase(j.begin() + i + 1);
      j[i] = merged;
      return attachY(growRec(s, j), i);
    }
    if (a == 1 && b == -1) {
      Color c = s[i];
      s.erase(s.begin() + i, s.begin() + i + 2);
      j.erase(j.begin() + i, j.begin() + i + 2);
      return attachU(growRec(s, j), i, c);
    }
    if (a == 0 && (b == -1 || b == 0)) {
      j[i] = -1;
      j[i + 1] = b + 1;
    } else if (a == 1 && b == 0) {
      j[i] = 0;
      j[i + 1] = 1;
    } else {
      continue;
    }
    std::swap(s[i], s[i + 1]);
    return attachH(growRec(s, j), i);
  }
  throw WebError("no growth rule applies to " + stateString(j));
}

}  // namespace

Web growByRules(const Signature& s, const StateString& j) {
  if (j.size() != s.letters.size()) throw WebError("state length does not match the signature");
  for (int x : j)
    if (x < -1 || x > 1) throw WebError("states must be -1, 0 or 1");
  Web w = growRec(s.letters, j).compacted();
  if (!isNonElliptic(w) || dominantPath(w) != j) throw WebError(stateString(j) + " is not a dominant path");
  return w;
}

Web growthInverse(const Signature& s, const StateString& j) {
  if (j.size() != s.letters.size()) throw WebError("state length does not match the signature");
  if (s.letters.size() <= static_cast<size_t>(kCatalogLimit)) return enumerateBasis(s).lookup(j);
  return growByRules(s, j);
}

}  // namespace sl3web
