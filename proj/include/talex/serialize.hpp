// Copyright 2026 The talex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TALEX_SERIALIZE_HPP
#define TALEX_SERIALIZE_HPP

#include <json.hpp>

#include "talex/polyring.hpp"

namespace talex {

using Json = nlohmann::ordered_json;

/// {"vars": ["s","y","t"], "terms": [{"e": [es, ey, et], "c": "<decimal>"}, ...]}
/// with terms in canonical ascending order.
Json to_json(const MPoly &p);
/// Same layout with "vars": ["x","y"].
Json to_json(const XYPoly &p);
/// {"re": .., "im": ..}
Json to_json(Complex z);

/// Throws Parse on malformed input.
MPoly mpoly_from_json(const Json &j);
/// Accepts the (x, y) layout, or an (s, y) polynomial symmetric in s.
XYPoly xypoly_from_json(const Json &j);

} // namespace talex

#endif
