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

#ifndef SL3WEB_SKEIN_HPP_
#define SL3WEB_SKEIN_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sl3web/laurent.hpp"
#include "sl3web/web.hpp"

namespace sl3web {

enum class SkeinMode { Commutative, Quantum };

struct SkeinCoefficients {
  LaurentPoly loop, bigon, squareA, squareB;
  // crossing = smooth[t] * (oriented smoothing) + hweb[t] * (H fragment),
  // t = 0 for a positive crossing, 1 for a negative one
  LaurentPoly smooth[2], hweb[2];
  static SkeinCoefficients forMode(SkeinMode m);
};

struct WeightedDiagram {
  Web web;
  LaurentPoly coeff;
};

WeightedDiagram removeLoop(const Web& d, SkeinMode mode);
WeightedDiagram removeBigon(const Web& d, SkeinMode mode);
std::vector<WeightedDiagram> resolveSquare(const Web& d, SkeinMode mode);
std::vector<WeightedDiagram> resolveCrossing(const Web& d, SkeinMode mode);

class SkeinEngine {
 public:
  explicit SkeinEngine(SkeinMode mode);
  // seed != 0 picks rules at random, for confluence testing
  WebCombo reduce(const Web& d, uint64_t strategySeed = 0);
  void setTrace(std::function<void(const std::string&)> sink) { trace_ = std::move(sink); }
  void setStepLimit(long limit) { stepLimit_ = limit; }
  SkeinMode mode() const { return mode_; }
  const SkeinCoefficients& coefficients() const { return k_; }
  size_t memoSize() const;

  // Eager planar simplification; returns false when the diagram vanishes.
  bool simplify(Web& d, LaurentPoly& coeff, uint64_t* rng = nullptr);

 private:
  WebCombo reduceNormalized(const Web& d, uint64_t* rng, int depth);
  LaurentPoly closedValue(const Web& d);

  SkeinMode mode_;
  SkeinCoefficients k_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, WebCombo> memo_;
  std::function<void(const std::string&)> trace_;
  long steps_ = 0;
  long stepLimit_ = 50'000'000;
};

WebCombo reduceToBasis(const Web& d, SkeinMode mode = SkeinMode::Commutative);

// Positive (+1) or negative (-1) oriented crossing sign of a crossing vertex.
int crossingSign(const Web& d, int c);

}  // namespace sl3web

#endif  // SL3WEB_SKEIN_HPP_
