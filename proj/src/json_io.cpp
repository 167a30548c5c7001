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

#include "rotundus/json_io.hpp"

#include <stdexcept>

namespace rotundus {

json to_json(const BigInt& v) { return v.get_str(); }

BigInt bigint_from_json(const json& j) {
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.get<long>());
  throw std::invalid_argument("expected a decimal string, got " + j.dump());
}

json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"c", c.get_str()}, {"e", m.exponents()}});
  }
  return {{"arity", p.arity()}, {"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("arity") || !j.contains("terms")) {
    throw std::invalid_argument("polynomial object needs 'arity' and 'terms'");
  }
  const auto arity = j.at("arity").get<std::size_t>();
  if (arity == 0) throw std::invalid_argument("polynomial arity must be positive");
  MultiPoly p = MultiPoly::zero(arity);
  for (const auto& t : j.at("terms")) {
    auto e = t.at("e").get<std::vector<std::uint32_t>>();
    if (e.size() != arity) throw std::invalid_argument("exponent vector length differs from arity");
    p += MultiPoly::term(Monomial(std::move(e)), bigint_from_json(t.at("c")));
  }
  return p;
}

json to_json(const IntPoly& p) {
  json c = json::array();
  for (const auto& v : p.coeffs()) c.push_back(v.get_str());
  return c;
}

namespace {

template <typename T>
json matrix_json(const SquareMatrix<T>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"dim", m.dim()}, {"entries", std::move(rows)}};
}

}  // namespace

json to_json(const SquareMatrix<BigInt>& m) { return matrix_json(m); }
json to_json(const SquareMatrix<MultiPoly>& m) { return matrix_json(m); }

AnyMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    throw std::invalid_argument("matrix object needs 'dim' and 'entries'");
  }
  const auto dim = j.at("dim").get<std::size_t>();
  const json& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != dim) throw std::invalid_argument("matrix needs 'dim' rows");
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != dim) throw std::invalid_argument("every matrix row needs 'dim' entries");
  }
  const bool symbolic = dim > 0 && rows[0][0].is_object();
  if (!symbolic) {
    SquareMatrix<BigInt> m(dim, BigInt(0));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) m(i, k) = bigint_from_json(rows[i][k]);
    return m;
  }
  const MultiPoly first = poly_from_json(rows[0][0]);
  SquareMatrix<MultiPoly> m(dim, MultiPoly::zero(first.arity()));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      if (!rows[i][k].is_object()) throw std::invalid_argument("matrix entries must all be the same kind");
      m(i, k) = poly_from_json(rows[i][k]);
      if (m(i, k).arity() != first.arity()) throw std::invalid_argument("matrix entries differ in arity");
    }
  }
  return m;
}

json to_json(const CyclicSequence& s) {
  json a = json::array();
  for (const auto& v : s.values()) {
    if (v.fits_slong_p()) {
      a.push_back(v.get_si());
    } else {
      a.push_back(v.get_str());
    }
  }
  return a;
}

json to_json(const Triangulation& t) {
  json d = json::array();
  for (const auto& [i, k] : t.diagonals) d.push_back({i, k});
  return {{"n", t.n}, {"diagonals", std::move(d)}, {"quiddity", to_json(quiddity(t))}};
}

Triangulation triangulation_from_json(const json& j) {
  std::vector<Diagonal> d;
  for (const auto& p : j.at("diagonals")) d.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  return Triangulation::make(j.at("n").get<int>(), std::move(d));
}

}  // namespace rotundus
