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

#ifndef SL3WEB_CLASSICAL_HPP_
#define SL3WEB_CLASSICAL_HPP_

#include <gmpxx.h>

#include <array>
#include <random>
#include <vector>

#include "sl3web/web.hpp"

namespace sl3web {

using Vec3 = std::array<mpq_class, 3>;

// One covector per white boundary vertex and one vector per black boundary
// vertex, each in boundary order.
struct Configuration {
  std::vector<Vec3> covectors;
  std::vector<Vec3> vectors;
};

// Sum over proper labellings; crossings are pass-through.
mpq_class evalNumeric(const Web& d, const Configuration& c);
mpq_class evalComboNumeric(const WebCombo& wc, const Configuration& c);

Configuration randomConfiguration(const Web& d, std::mt19937_64& rng, int range = 9);
using Mat3 = std::array<Vec3, 3>;
Mat3 randomUnimodular(std::mt19937_64& rng);
Configuration actOn(const Configuration& c, const Mat3& g);

}  // namespace sl3web

#endif  // SL3WEB_CLASSICAL_HPP_
