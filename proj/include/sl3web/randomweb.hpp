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

#ifndef SL3WEB_RANDOMWEB_HPP_
#define SL3WEB_RANDOMWEB_HPP_

#include <random>

#include "sl3web/web.hpp"

namespace sl3web {

// Inserts a bigon into the edge of half-edge h.
void insertBigon(Web& w, int h);

// Overlays a few small planar pieces on random boundary slots; the drawing
// decides where strands cross.
Web randomDiagram(std::mt19937_64& rng, int maxInternal = 10, int maxCrossings = 3);

}  // namespace sl3web

#endif  // SL3WEB_RANDOMWEB_HPP_
