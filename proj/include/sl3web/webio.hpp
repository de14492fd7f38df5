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


#ifndef SL3WEB_WEBIO_HPP_
#define SL3WEB_WEBIO_HPP_

#include <string>

#include "json.hpp"
#include "sl3web/web.hpp"

namespace sl3web {

// { signature, marked, vertices, halfEdges, boundary, multiplicities }.
// Half-edges are listed vertex by vertex in rotation order; `next` is the
// clockwise successor at the same vertex.
nlohmann::json webToJson(const Web& w);
Web webFromJson(const nlohmann::json& j);  // throws WebError
std::string webToJsonString(const Web& w, int indent = -1);
Web webFromJsonString(const std::string& s);
Web readWebFile(const std::string& path);
void writeWebFile(const std::string& path, const Web& w);

nlohmann::json comboToJson(const WebCombo& c);

std::string webToDot(const Web& w);
std::string webToSvg(const Web& w);

}  // namespace sl3web

#endif  // SL3WEB_WEBIO_HPP_
