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

#ifndef SL3WEB_DUALCANON_HPP_
#define SL3WEB_DUALCANON_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "sl3web/quantum.hpp"

namespace sl3web {

enum class CanonStatus { DualCanonical, NotDualCanonical, Unknown };
const char* canonStatusName(CanonStatus s);

struct CanonVerdict {
  CanonStatus status = CanonStatus::Unknown;
  std::string evidence;  // "witness", "no exact red graph", "cup closure" or a reason
  StateString leader;
  StateString witness;   // set for NotDualCanonical
  LaurentPoly coefficient;
  int witnessExponent = 0;  // an exponent >= 0 present in coefficient
};

// Expands w (or only the given states) and looks for a non-leading
// coefficient with a term of exponent >= 0; failing that, an absent exact
// red graph certifies the web.
CanonVerdict negativeExponentCheck(const Web& w, const std::vector<StateString>& probes = {},
                                   uint64_t seed = 1);
// Verdict for the union of webs with the given verdicts.
CanonVerdict cupClosure(const std::vector<CanonVerdict>& operands);
// Throws WebError unless the witness really violates the property.
void checkWitness(const Web& w, const CanonVerdict& v);

nlohmann::json verdictToJson(const CanonVerdict& v);

struct ObstructionOptions {
  int jobs = 1;
  bool classifyThick5 = false;  // all cycle G-reductions of Thick5, slow
};

// Every sub-check carries "pass"; the top level "ok" is their conjunction.
nlohmann::json obstructionReport(const ObstructionOptions& opt = {});

}  // namespace sl3web

#endif  // SL3WEB_DUALCANON_HPP_
