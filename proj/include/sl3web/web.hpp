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

#ifndef SL3WEB_WEB_HPP_
#define SL3WEB_WEB_HPP_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sl3web/laurent.hpp"

namespace sl3web {

enum class Color : uint8_t { White = 0, Black = 1 };
enum class VertexKind : uint8_t { Boundary = 0, Internal = 1, Crossing = 2 };

inline Color opposite(Color c) { return c == Color::White ? Color::Black : Color::White; }
char colorChar(Color c);

class WebError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Signature {
  std::vector<Color> letters;
  int firstIndex = 0;
  std::string str() const;
  static Signature parse(const std::string& s);
  int whites() const;
  int blacks() const;
  bool operator==(const Signature& o) const { return letters == o.letters; }
};

// Half-edge rotation system. Internal and crossing vertices list their
// half-edges clockwise. A boundary vertex lists its legs in boundary order,
// which is counterclockwise around the point. The boundary vector runs
// clockwise around the disc starting at the marked point.
struct Web {
  std::vector<VertexKind> kind;
  std::vector<Color> color;
  std::vector<std::vector<int>> rot;
  std::vector<int> hv;
  std::vector<int> twin;
  std::vector<int> boundary;
  std::vector<int8_t> over;  // crossings: strand (0 = rot[0..2], 1 = rot[1..3]) drawn on top
  std::vector<uint8_t> alive;
  int loops = 0;

  int numVertices() const { return static_cast<int>(kind.size()); }
  int numHalfEdges() const { return static_cast<int>(hv.size()); }
  int addVertex(VertexKind k, Color c);
  int newHalfEdge(int v);
  void link(int a, int b) {
    twin[a] = b;
    twin[b] = a;
  }
  int degree(int v) const { return static_cast<int>(rot[v].size()); }
  int rotIndex(int h) const;
  int rotNext(int h, int step = 1) const;
  int other(int h) const { return hv[twin[h]]; }

  bool isBoundary(int v) const { return kind[v] == VertexKind::Boundary; }
  bool isCrossing(int v) const { return kind[v] == VertexKind::Crossing; }
  bool isInternal(int v) const { return kind[v] == VertexKind::Internal; }
  int numBoundary() const { return static_cast<int>(boundary.size()); }
  int numInternal() const;
  int numCrossings() const;
  int numEdges() const;

  // Continue a strand through crossing vertices; returns the half-edge at
  // the first non-crossing vertex reached by leaving along h.
  int strandEnd(int h) const;
  Color strandColor(int h) const;

  void kill(int v);
  Web compacted() const;
  void validate() const;
};

struct FaceSet {
  std::vector<std::vector<int>> faces;  // real half-edges, counterclockwise
  std::vector<uint8_t> internal;
  std::vector<int> faceOf;  // half-edge -> face
  std::vector<int> arcFace;  // boundary arc i (from boundary[i] to boundary[i+1]) -> inner face
};

FaceSet facesOf(const Web& w);
std::vector<std::vector<int>> internalFaces(const Web& w);
int eulerDefect(const Web& w);
std::vector<int> componentOf(const Web& w, int* count);

Signature signatureOf(const Web& w);
bool isNonElliptic(const Web& w);
bool hasMultiEdge(const Web& w);
bool hasBoundaryY(const Web& w);
bool hasClaspCollision(const Web& w);
std::string canonicalKey(const Web& w, bool ignoreOver = false);
std::string rotationClassKey(const Web& w);
Web rotateMarked(const Web& w, int steps);

Web unclasp(const Web& w);
Web clasp(const Web& w, const std::vector<int>& runs);
std::vector<int> multiplicities(const Web& w);

Web disjointUnion(const Web& a, const Web& b);
Web emptyWeb();

struct Port {
  int h;  // half-edge at a removed vertex leading out of the region
};

// A planar replacement: new vertices with clockwise slot lists. A slot is
// either a port index (>= 0) or -(1 + j) for an edge to new vertex j.
struct Fragment {
  std::vector<Color> colors;
  std::vector<std::vector<int>> slots;
  std::vector<std::pair<int, int>> pairs;  // direct port-to-port joins
};

// Removes `removed`, attaches the fragment to `ports` and returns the
// number of closed loops created.
int rewire(Web& w, const std::vector<int>& removed, const std::vector<int>& ports,
           const Fragment& frag);

// Commutative and quantum linear combinations of webs keyed canonically.
struct WebCombo {
  std::map<std::string, LaurentPoly> terms;
  std::map<std::string, Web> webs;

  void add(const std::string& key, const Web& w, const LaurentPoly& c);
  void add(const Web& w, const LaurentPoly& c);
  WebCombo& operator+=(const WebCombo& o);
  WebCombo scaled(const LaurentPoly& c) const;
  bool operator==(const WebCombo& o) const { return terms == o.terms; }
  bool isZero() const { return terms.empty(); }
  size_t size() const { return terms.size(); }
};

}  // namespace sl3web

#endif  // SL3WEB_WEB_HPP_
