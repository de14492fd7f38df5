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


#ifndef SL3WEB_REDGRAPH_HPP_
#define SL3WEB_REDGRAPH_HPP_

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sl3web/web.hpp"

namespace sl3web {

// Internal faces of a web, indexed in the order of internalFaces().
struct FaceIndex {
  std::vector<std::vector<int>> faces;  // half-edges, counterclockwise
  std::vector<int> faceOf;              // half-edge -> face index or -1
  std::vector<std::vector<int>> around; // vertex -> distinct incident face indices
  std::vector<std::vector<int>> adj;    // dual adjacency (repeated for parallel edges)
};
FaceIndex faceIndex(const Web& w);

struct RedGraph {
  std::vector<int> faces;                    // sorted face indices
  std::vector<std::pair<int, int>> edges;    // positions in `faces`, one per shared web edge
  std::vector<std::vector<int>> gray;        // per face: gray half-edges (at the face's vertices)
  std::vector<int> ed;                       // per face: external degree

  int twiceLevel() const;  // 2 I(G)
  std::string str() const;
};

// Builds the red graph on a face subset; false when the subset violates the
// triple condition or is empty.
bool makeRedGraph(const Web& w, const FaceIndex& fi, const std::vector<int>& faces, RedGraph* out);

// orientation[e] = 0: edge e points to edges[e].second, 1: to edges[e].first.
std::vector<double> perVertexLevel(const RedGraph& g, const std::vector<int>& orientation);
bool isAdmissible(const RedGraph& g, std::vector<int>* orientation = nullptr);
bool isExact(const RedGraph& g);
bool hasCycle(const RedGraph& g);
// Length of the shortest cycle through red faces, 0 if acyclic.
int girth(const RedGraph& g);

// Every face subset satisfying the red-graph conditions. Throws WebError
// above maxFaces internal faces.
std::vector<RedGraph> enumerateRedGraphs(const Web& w, int maxFaces = 24);
// Calls visit once per chordless cycle of internal faces (either direction)
// whose faces can have even external degree at most 4.
void forEachInducedFaceCycle(const Web& w, const FaceIndex& fi, size_t minLength,
                             const std::function<void(const std::vector<int>&)>& visit);
// Exact red graphs found among chordless face cycles of length >= 6.
std::vector<RedGraph> exactCycleRedGraphs(const Web& w);
// Exact red graphs by exhaustive enumeration.
std::vector<RedGraph> exactRedGraphs(const Web& w, int maxFaces = 24);
bool hasExactRedGraph(const Web& w);

// A pairing lists gray half-edges two by two.
using Pairing = std::vector<std::pair<int, int>>;
std::vector<Pairing> pairings(const Web& w, const RedGraph& g, size_t limit = 64);
// W_G before skein reduction. Throws WebError on an invalid pairing.
Web gReduction(const Web& w, const RedGraph& g, const Pairing& p);
WebCombo reduceByRedGraph(const Web& w, const RedGraph& g, const Pairing& p);

nlohmann::json redGraphToJson(const RedGraph& g, const std::vector<Pairing>& ps = {});

}  // namespace sl3web

#endif  // SL3WEB_REDGRAPH_HPP_
