/*
 * Copyright 2026 The Rotundus Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <variant>

#include <json.hpp>

#include "rotundus/bigint.hpp"
#include "rotundus/matrix.hpp"
#include "rotundus/multipoly.hpp"
#include "rotundus/triangulation.hpp"

namespace rotundus {

using json = nlohmann::json;

// Wire formats. Integers always travel as decimal strings.
//   polynomial     {"arity": n, "terms": [{"c": "<dec>", "e": [e1..en]}, ...]}
//                  terms in canonical order
//   matrix         {"dim": n, "entries": [[...], ...]}, entries either all
//                  decimal strings or all polynomial objects
//   triangulation  {"n": n, "diagonals": [[i, j], ...], "quiddity": [...]}

json to_json(const BigInt& v);
BigInt bigint_from_json(const json& j);

json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j);

json to_json(const IntPoly& p);

json to_json(const SquareMatrix<BigInt>& m);
json to_json(const SquareMatrix<MultiPoly>& m);

using AnyMatrix = std::variant<SquareMatrix<BigInt>, SquareMatrix<MultiPoly>>;
AnyMatrix matrix_from_json(const json& j);

json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const json& j);

json to_json(const CyclicSequence& s);

}  // namespace rotundus
