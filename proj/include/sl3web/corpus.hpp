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

#ifndef SL3WEB_CORPUS_HPP_
#define SL3WEB_CORPUS_HPP_

#include <string>
#include <vector>

#include "sl3web/web.hpp"

namespace sl3web {

Web edgeWeb(Color first);
Web tripod(Color leaves);
Web hWeb();  // two tripods joined by an edge, boundary (b,b,w,w)
Web hexagonW();
Web webB();  // six U-arcs between adjacent clasps of width 2
Web honeycomb(int k);  // clasped thick_k(W), marked point on a black clasp
Web honeycombUnclasped(int k);  // Thick_k(W) with the marked point preset
Web cupUnionWB(int copiesOfB);  // W with nested B-arcs, unclasped
Web bigonWeb();
Web squareWeb();
Web loopWeb();

// Marked slot inside a black clasp used for unclasped thickenings.
int markedSlot(int k);
std::vector<int> thickRuns(int k);

// Parses a state string such as "1,0,-1" or "11 -1-10".
std::vector<int> parseState(const std::string& s);
std::string stateString(const std::vector<int>& j);

std::vector<int> dominantThick5Expected();
std::vector<int> dominantWBBExpected();
std::string signatureS5();
std::string signatureS3();

}  // namespace sl3web

#endif  // SL3WEB_CORPUS_HPP_
