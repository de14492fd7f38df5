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

#ifndef SL3WEB_DISCCONFIG_HPP_
#define SL3WEB_DISCCONFIG_HPP_

#include <array>
#include <string>
#include <vector>

#include "sl3web/quantum.hpp"

namespace sl3web {

// Directions in counterclockwise order.
enum class Position { N = 0, NW, SW, S, SE, NE };

const char* positionName(Position p);
bool isLower(Position p);

// Exponent of v for the counterclockwise step from direction d to d + 1.
// A clockwise step back carries the negated exponent.
using RotationChart = std::array<int, 6>;

// Frozen chart, reproduced by calibrateRotationChart().
extern const RotationChart kRotationChart;

// A web drawn in a disc with every internal vertex a Y (two legs up) or a
// lambda (one leg up), the first boundary point near the bottom, upper legs
// continued straight up and lower legs routed around the disc. Lower legs
// on the left run of the boundary order turn left, the rest turn right.
struct DiscFrame {
  HeightFrame frame;
  std::vector<char> type;           // per vertex: 'Y', 'L', or 0 for boundary
  std::vector<int> role;            // per half-edge at an internal vertex, a Position or -1
  std::vector<Position> positions;  // per boundary index
  std::vector<int> side;            // per boundary index: -1 left, +1 right, 0 up
  std::vector<double> angle;        // per boundary index, on the unit circle
};

// Throws WebError when no drawing meets the hypothesis.
DiscFrame discFrame(const Web& w);
// Same with the first point at angle -pi/2 - 2 pi t / n; false on failure.
bool discFrameAt(const Web& w, double t, DiscFrame* out);
bool hasDiscFrame(const Web& w);

enum class ArcColor { Red, Green, Black };

struct DiscConfiguration {
  struct Arc {
    int from, to;  // boundary indices, from has state 1
    int exponent;  // w(from, to) = v^exponent
    ArcColor color;
  };
  std::vector<Position> positionString;
  StateString state;
  std::vector<Arc> arcs;
  std::vector<ArcColor> loops;
  int red = 0, green = 0, e = 0, u = 0, offset = 0;
  int weight = 0;  // arc exponents plus one per red loop minus one per green loop

  int exponent() const { return offset + weight; }
};

// Rotation weight between two directions, clockwise or counterclockwise.
int rotationExponent(const RotationChart& c, Position from, Position to, bool clockwise);
// 2U - E for a state on a frame.
int offsetExponent(const DiscFrame& df, const StateString& j, int* u = nullptr, int* e = nullptr);
DiscConfiguration configurationOf(const DiscFrame& df, const Flow& f,
                                  const RotationChart& c = kRotationChart);

Expansion expandByDiscConfig(const Web& w);
LaurentPoly coefficientByDiscConfig(const Web& w, const StateString& j);

// Searches all charts with steps in {-1, 0, 1} for those reproducing the
// flow expansion of the one-vertex Y and lambda webs.
std::vector<RotationChart> calibrateRotationChart();

}  // namespace sl3web

#endif  // SL3WEB_DISCCONFIG_HPP_
