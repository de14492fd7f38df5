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


#ifndef SL3WEB_WEBENUM_HPP_
#define SL3WEB_WEBENUM_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sl3web/quantum.hpp"
#include "sl3web/web.hpp"

namespace sl3web {

// Dominant sl3 weights (a, b) with multiplicities. White letters stand for
// the standard representation (1, 0), black letters for its dual (0, 1).
struct WeightMultiset {
  std::map<std::pair<int, int>, uint64_t> mult;
};

WeightMultiset tensorWith(const WeightMultiset& m, Color c);
WeightMultiset tensorPower(const Signature& s);
uint64_t dimInvariants(const Signature& s);

// All non-elliptic webs with the given boundary, built by attaching U, Y and
// H pieces at adjacent boundary points to smaller non-elliptic webs.
std::vector<Web> nonEllipticWebs(const Signature& s);

struct BasisCatalog {
  Signature signature;
  std::map<StateString, Web> webs;  // dominant path -> web
  size_t size() const { return webs.size(); }
  // Throws WebError when j is not the dominant path of a catalog web.
  const Web& lookup(const StateString& j) const;
};

// Throws WebError when the generated webs fall short of dimInvariants(s) or
// two webs share a dominant path. Uses SL3WEB_CACHE_DIR when set.
BasisCatalog enumerateBasis(const Signature& s, int jobs = 1);

// Local growth: repeatedly replaces an adjacent pair of letters by a U, Y or
// H piece according to their states, then checks the dominant path of the
// result. Throws WebError when no rule applies or the path is not dominant.
Web growByRules(const Signature& s, const StateString& j);

// Catalog lookup up to kCatalogLimit boundary points, local growth beyond.
constexpr int kCatalogLimit = 10;
Web growthInverse(const Signature& s, const StateString& j);

nlohmann::json catalogToJson(const BasisCatalog& c);
BasisCatalog catalogFromJson(const nlohmann::json& j);
// Catalog files live in <dir>/<signature>/catalog.json.
void saveCatalog(const std::string& dir, const BasisCatalog& c);
bool loadCatalog(const std::string& dir, const Signature& s, BasisCatalog* out);

}  // namespace sl3web

#endif  // SL3WEB_WEBENUM_HPP_
